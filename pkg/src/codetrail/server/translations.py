"""UI translation bundles: language list plus per-language text maps.

Completeness is enforced at load time: every declared language must carry
exactly the key set of the first language, so a missing key is a config error
that fails fast instead of a blank label in some client later.
"""

import json
from dataclasses import dataclass
from importlib import resources


class IncompleteTranslation(ValueError):
    """A declared language is missing keys (or has extras) vs the first one."""

    def __init__(self, language: str, missing, extra):
        self.language = language
        self.missing = tuple(sorted(missing))
        self.extra = tuple(sorted(extra))
        parts = []
        if self.missing:
            parts.append(f"missing keys {list(self.missing)}")
        if self.extra:
            parts.append(f"unexpected keys {list(self.extra)}")
        super().__init__(f"language {language!r}: " + "; ".join(parts))


@dataclass(frozen=True)
class TranslationBundle:
    languages: tuple
    texts: dict  # language code -> {text key -> string}

    def __post_init__(self):
        object.__setattr__(self, "languages", tuple(self.languages))
        if not self.languages:
            raise ValueError("bundle must declare at least one language")
        reference = None
        for language in self.languages:
            keys = set(self.texts.get(language, {}))
            if reference is None:
                reference = keys
                if not keys:
                    raise IncompleteTranslation(language, ["<all>"], [])
                continue
            if keys != reference:
                raise IncompleteTranslation(
                    language, reference - keys, keys - reference
                )

    def text(self, language: str, key: str) -> str:
        return self.texts[language][key]

    def to_json(self) -> dict:
        return {"languages": list(self.languages), "texts": dict(self.texts)}

    @classmethod
    def from_json(cls, data: dict) -> "TranslationBundle":
        try:
            return cls(languages=data["languages"], texts=dict(data["texts"]))
        except KeyError as exc:
            raise ValueError(f"translation bundle missing field {exc.args[0]!r}") from None


def load_translations(path) -> TranslationBundle:
    with open(path, encoding="utf-8") as fh:
        return TranslationBundle.from_json(json.load(fh))


def default_translations() -> TranslationBundle:
    raw = resources.files("codetrail").joinpath("data/translations.json").read_text("utf-8")
    return TranslationBundle.from_json(json.loads(raw))
