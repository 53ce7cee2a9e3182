"""
Report emission: json, csv, table, edn and transit-json.

Everything handed to a renderer is already plain data (dicts, lists, strings,
ints, bools); exact values arrive as strings.  VerificationReport objects are
turned into dicts by write handlers, so each format owns the conversion the
same way.
"""

import csv
import json
from io import StringIO
from typing import Callable, Dict, Iterable, List, Sequence

import edn_format
import transit.transit_types
from transit.reader import Reader
from transit.writer import Writer

from errors import ConfigError
from verifiers import VerificationReport

FORMATS = ("json", "csv", "table", "edn", "transit")

REPORT_COLUMNS = ("identity", "shape", "d", "mode", "pass")


def report_rows(reports: Iterable[VerificationReport], timing: bool = False) -> List[Dict]:
    """Reports as dicts, sorted by (identity, shape, d)."""
    rows = []
    for r in sorted(reports, key=VerificationReport.sort_key):
        row = r.to_dict()
        if not timing:
            row.pop("runtime", None)
        rows.append(row)
    return rows


def _plain(d):
    """Edn and transit containers back to dicts and lists."""
    if isinstance(d, (edn_format.immutable_dict.ImmutableDict, transit.transit_types.frozendict,
                      dict)):
        return {_plain(k): _plain(v) for k, v in d.items()}
    if isinstance(d, (list, tuple, edn_format.immutable_list.ImmutableList)):
        return [_plain(item) for item in d]
    if isinstance(d, (edn_format.edn_lex.Keyword, edn_format.edn_lex.Symbol)):
        return d.name
    if isinstance(d, transit.transit_types.Boolean):
        return bool(d)
    return d


def from_edn(s: str):
    return _plain(edn_format.loads(s))


def from_transit(s: str):
    return _plain(Reader("json").read(StringIO(s)))


class Edn:
    """EDN writer with keyword map keys and per-type write handlers."""

    def __init__(self):
        self.write_handlers: Dict[type, Callable] = {}

    def add_write_handler(self, type_class, writer_fn):
        """Add a custom EDN write handler for a Python type"""
        if not callable(writer_fn):
            raise ValueError(f"Write handler must be callable: {writer_fn}")
        self.write_handlers[type_class] = writer_fn

    def write(self, obj) -> str:
        return self._to_edn_with_handlers(obj)

    def _escape_edn_string(self, s: str) -> str:
        escaped = s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{escaped}"'

    def _key(self, k) -> str:
        if isinstance(k, str) and k and not any(ch.isspace() for ch in k):
            return f":{k}"
        return self._to_edn_with_handlers(k)

    def _to_edn_with_handlers(self, obj) -> str:
        for type_class, writer_fn in self.write_handlers.items():
            if isinstance(obj, type_class):
                return self._to_edn_with_handlers(writer_fn(obj))
        if obj is None:
            return "nil"
        if isinstance(obj, bool):
            return "true" if obj else "false"
        if isinstance(obj, (int, float)):
            return str(obj)
        if isinstance(obj, str):
            return self._escape_edn_string(obj)
        if isinstance(obj, (list, tuple)):
            return f"[{' '.join(self._to_edn_with_handlers(item) for item in obj)}]"
        if isinstance(obj, dict):
            pairs = [f"{self._key(k)} {self._to_edn_with_handlers(v)}" for k, v in obj.items()]
            return f"{{{' '.join(pairs)}}}"
        if isinstance(obj, (set, frozenset)):
            return f"#{{{' '.join(sorted(self._to_edn_with_handlers(i) for i in obj))}}}"
        return self._escape_edn_string(str(obj))


class ReportWriteHandler:
    @staticmethod
    def tag(obj):
        return "map"

    @staticmethod
    def rep(obj):
        return obj.to_dict()

    @staticmethod
    def string_rep(obj):
        return json.dumps(obj.to_dict(), sort_keys=True)


class Transit:
    """Transit-json writer with registered handler classes."""

    def __init__(self):
        self.write_handlers: Dict[type, type] = {VerificationReport: ReportWriteHandler}

    def add_write_handler(self, classes, handler_class):
        """Add a transit write handler class for specific classes"""
        if not (hasattr(handler_class, "tag") and hasattr(handler_class, "rep")):
            raise ValueError(f"Write handler must have 'tag' and 'rep' methods: {handler_class}")
        if not isinstance(classes, (list, tuple)):
            classes = [classes]
        for cls in classes:
            self.write_handlers[cls] = handler_class

    def write(self, data) -> str:
        io_object = StringIO()
        writer = Writer(io_object, "json")
        for type_class, handler_class in self.write_handlers.items():
            writer.register(type_class, handler_class)
        writer.write(data)
        return io_object.getvalue()


def _edn() -> Edn:
    edn = Edn()
    edn.add_write_handler(VerificationReport, VerificationReport.to_dict)
    return edn


def _table(rows: Sequence[Dict], columns: Sequence[str]) -> str:
    cells = [[str(c) for c in columns]]
    for row in rows:
        cells.append(["" if row.get(c) is None else _cell(row.get(c)) for c in columns])
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip()
                     for line in cells) + "\n"


def _cell(v) -> str:
    if isinstance(v, bool):
        return "pass" if v else "FAIL"
    return str(v)


def _csv(rows: Sequence[Dict], columns: Sequence[str]) -> str:
    out = StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if row.get(c) is None else row.get(c) for c in columns])
    return out.getvalue()


def render_rows(rows: List[Dict], fmt: str, columns: Sequence[str]) -> str:
    """Render already-plain rows; `columns` picks what csv and table show."""
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv(rows, columns)
    if fmt == "table":
        return _table(rows, columns)
    if fmt == "edn":
        return _edn().write(rows) + "\n"
    if fmt == "transit":
        return Transit().write(rows) + "\n"
    raise ConfigError(f"Unknown output format {fmt!r}", {"formats": list(FORMATS)})


def render_reports(reports: Iterable[VerificationReport], fmt: str = "json",
                   timing: bool = False) -> str:
    return render_rows(report_rows(reports, timing), fmt, REPORT_COLUMNS)


def render_enumeration(result: Dict, fmt: str = "json") -> str:
    """An enumeration result: family, shape, d, count and the items themselves."""
    if fmt in ("csv", "table"):
        return render_rows([result], fmt, ("family", "shape", "d", "count"))
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "edn":
        return _edn().write(result) + "\n"
    if fmt == "transit":
        return Transit().write(result) + "\n"
    raise ConfigError(f"Unknown output format {fmt!r}", {"formats": list(FORMATS)})
