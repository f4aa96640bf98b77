"""Bit-exact CSV codecs for the two event-stream file formats.

The on-disk and on-wire format for snapshot and action streams is RFC-4180
CSV, UTF-8, LF row endings, with a fixed header per stream. Cells containing
comma, double quote, CR, or LF are double-quote escaped; everything else is
written verbatim. Decoding accepts exactly the encoder's image: any structural
deviation (foreign header, unbalanced quote, stray CR, wrong column count,
non-integer timestamp, date/timestamp mismatch) raises MalformedCsv with the
1-based line number where the offending cell starts.

Hand-rolled on purpose: with LF row endings the stdlib csv writer leaves a
lone CR unquoted, which its own reader then misparses as a row break, and the
stdlib reader cannot report unbalanced quotes with line numbers.
"""

from .records import ActionRecord, SnapshotRecord, iso_from_millis

SNAPSHOT_HEADER = "date,timestampMillis,taskKey,language,fileName,fragment"
ACTION_HEADER = "date,timestampMillis,eventType,actionId,detail"

_NEEDS_QUOTING = set(',"\r\n')


class MalformedCsv(ValueError):
    """Input violates the stream format. `line` is 1-based."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _cell(text: str) -> str:
    if any(ch in _NEEDS_QUOTING for ch in text):
        return '"' + text.replace('"', '""') + '"'
    return text


def _encode(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(_cell(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def encode_snapshot_row(record: SnapshotRecord) -> str:
    """One encoded row without header, LF-terminated (for streaming appends)."""
    return (
        ",".join(
            _cell(c)
            for c in (
                record.date_iso,
                str(record.timestamp_millis),
                record.task_key,
                record.language,
                record.file_name,
                record.fragment,
            )
        )
        + "\n"
    )


def encode_action_row(record: ActionRecord) -> str:
    return (
        ",".join(
            _cell(c)
            for c in (
                record.date_iso,
                str(record.timestamp_millis),
                record.event_type,
                record.action_id,
                record.detail,
            )
        )
        + "\n"
    )


def encode_snapshot_csv(records) -> str:
    return SNAPSHOT_HEADER + "\n" + "".join(encode_snapshot_row(r) for r in records)


def encode_action_csv(records) -> str:
    return ACTION_HEADER + "\n" + "".join(encode_action_row(r) for r in records)


def _parse_rows(text: str, n_fields: int, start_line: int):
    """Strict RFC-4180 parse of the data rows (text already past the header).

    Yields (start_line, fields). LF terminates rows; CR is only legal inside
    quoted cells. Quotes must wrap whole cells and escape as "".
    """
    pos = 0
    line = start_line
    length = len(text)
    while pos < length:
        row_fields = []
        row_line = line
        while True:  # one row
            cell_line = line
            if pos < length and text[pos] == '"':
                pos += 1
                chunks = []
                while True:
                    if pos >= length:
                        raise MalformedCsv("unterminated quoted cell", cell_line)
                    ch = text[pos]
                    if ch == '"':
                        if pos + 1 < length and text[pos + 1] == '"':
                            chunks.append('"')
                            pos += 2
                            continue
                        pos += 1
                        break
                    if ch == "\n":
                        line += 1
                    chunks.append(ch)
                    pos += 1
                row_fields.append("".join(chunks))
                if pos < length and text[pos] not in ",\n":
                    raise MalformedCsv(
                        "closing quote not followed by comma or end of row", cell_line
                    )
            else:
                start = pos
                while pos < length and text[pos] not in ",\n":
                    if text[pos] == '"':
                        raise MalformedCsv("quote inside unquoted cell", cell_line)
                    if text[pos] == "\r":
                        raise MalformedCsv(
                            "carriage return outside quoted cell", cell_line
                        )
                    pos += 1
                row_fields.append(text[start:pos])
            if pos >= length:
                break
            if text[pos] == ",":
                pos += 1
                continue
            pos += 1  # LF
            line += 1
            break
        if len(row_fields) != n_fields:
            raise MalformedCsv(
                f"expected {n_fields} cells, got {len(row_fields)}", row_line
            )
        yield row_line, row_fields


def _split_header(text: str, header: str):
    """Validate the exact header line and return (data_text, first_data_line)."""
    if text == header:  # header-only file without trailing newline
        return "", 2
    if not text.startswith(header + "\n"):
        got = text.split("\n", 1)[0]
        raise MalformedCsv(f"expected header {header!r}, got {got!r}", 1)
    return text[len(header) + 1 :], 2


def _parse_timestamp(raw: str, line: int) -> int:
    stripped = raw[1:] if raw.startswith("-") else raw
    if not stripped.isdigit():
        raise MalformedCsv(f"non-integer timestamp {raw!r}", line)
    return int(raw)


def _check_date(date_iso: str, millis: int, line: int):
    expected = iso_from_millis(millis)
    if date_iso != expected:
        raise MalformedCsv(
            f"date {date_iso!r} does not match timestamp {millis} ({expected!r})", line
        )


def decode_snapshot_csv(text: str) -> list:
    """Inverse of encode_snapshot_csv on its image."""
    body, first_line = _split_header(text, SNAPSHOT_HEADER)
    records = []
    for line, fields in _parse_rows(body, 6, first_line):
        date_iso, raw_ts, task_key, language, file_name, fragment = fields
        millis = _parse_timestamp(raw_ts, line)
        _check_date(date_iso, millis, line)
        records.append(
            SnapshotRecord(
                timestamp_millis=millis,
                date_iso=date_iso,
                task_key=task_key,
                language=language,
                file_name=file_name,
                fragment=fragment,
            )
        )
    return records


def decode_action_csv(text: str) -> list:
    """Inverse of encode_action_csv on its image."""
    body, first_line = _split_header(text, ACTION_HEADER)
    records = []
    for line, fields in _parse_rows(body, 5, first_line):
        date_iso, raw_ts, event_type, action_id, detail = fields
        millis = _parse_timestamp(raw_ts, line)
        _check_date(date_iso, millis, line)
        try:
            record = ActionRecord(
                timestamp_millis=millis,
                date_iso=date_iso,
                event_type=event_type,
                action_id=action_id,
                detail=detail,
            )
        except ValueError as exc:
            raise MalformedCsv(str(exc), line) from None
        records.append(record)
    return records
