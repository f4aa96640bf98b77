"""Lexical identifier anonymization.

A profile-driven tokenizer splits code into strings, comments, numbers,
identifiers, and uncategorized bytes; identifier tokens outside the profile's
keyword and builtin sets are renamed to v0, v1, ... in order of first
occurrence. Everything else passes through byte-for-byte, so the output
re-lexes to the same non-identifier token stream.

Profiles are data files (keyword list, builtin list, token grammars as
regexes); adding a language family means adding a JSON file, not code. The
bundled "python" profile covers a #-comment scripting family with single,
double, and triple-quoted strings, including unterminated literals so that
mid-edit snapshots still tokenize sanely. Being purely lexical, the renamer
does not see scopes or f-string interpolations; that is the documented
trade-off of staying total over arbitrary, possibly broken code.
"""

import json
import re
from dataclasses import dataclass
from importlib import resources

TOKEN_KINDS = ("string", "comment", "number", "identifier", "other")


class UnknownLanguageFamily(ValueError):
    pass


@dataclass(frozen=True)
class LexerProfile:
    family: str
    keywords: frozenset
    builtins: frozenset
    identifier: str
    numbers: str
    strings: tuple
    comments: tuple

    @classmethod
    def from_json(cls, data: dict) -> "LexerProfile":
        return cls(
            family=data["family"],
            keywords=frozenset(data["keywords"]),
            builtins=frozenset(data["builtins"]),
            identifier=data["identifier"],
            numbers=data["numbers"],
            strings=tuple(data["strings"]),
            comments=tuple(data["comments"]),
        )

    def pattern(self) -> re.Pattern:
        # Strings first (longest constructs first within the profile data),
        # then comments and numbers, identifiers last. First match at each
        # position wins, so the profile's ordering is load-bearing.
        parts = [
            "(?P<string>" + "|".join(self.strings) + ")",
            "(?P<comment>" + "|".join(self.comments) + ")",
            "(?P<number>" + self.numbers + ")",
            "(?P<identifier>" + self.identifier + ")",
        ]
        return re.compile("|".join(parts), re.DOTALL)


def load_profile(family: str, profile_dir=None) -> LexerProfile:
    if profile_dir is not None:
        path = profile_dir / f"{family}.json"
        if not path.exists():
            raise UnknownLanguageFamily(f"no lexer profile for {family!r}")
        return LexerProfile.from_json(json.loads(path.read_text("utf-8")))
    base = resources.files("codetrail").joinpath("data/lexer_profiles")
    ref = base.joinpath(f"{family}.json")
    if not ref.is_file():
        raise UnknownLanguageFamily(f"no lexer profile for {family!r}")
    return LexerProfile.from_json(json.loads(ref.read_text("utf-8")))


def tokenize(code: str, profile: LexerProfile):
    """Split code into (kind, text) pairs whose concatenation equals the input."""
    tokens = []
    pos = 0
    for match in profile.pattern().finditer(code):
        if match.start() > pos:
            tokens.append(("other", code[pos : match.start()]))
        tokens.append((match.lastgroup, match.group()))
        pos = match.end()
    if pos < len(code):
        tokens.append(("other", code[pos:]))
    return tokens


def anonymize_code(code: str, profile: LexerProfile):
    """Rename identifiers to v0, v1, ... in first-occurrence order.

    Returns (anonymized code, original -> replacement map). Keywords and
    builtins keep their names; strings, comments, numbers, whitespace, and
    punctuation pass through unchanged.
    """
    mapping = {}
    out = []
    preserved = profile.keywords | profile.builtins
    for kind, text in tokenize(code, profile):
        if kind == "identifier" and text not in preserved:
            if text not in mapping:
                mapping[text] = f"v{len(mapping)}"
            out.append(mapping[text])
        else:
            out.append(text)
    return "".join(out), mapping
