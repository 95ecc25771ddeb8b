from typing import Dict, List, Optional, Tuple

from samuel.core.field import QQ, Field, parse_field
from samuel.core.polynomial import PolyRing
from samuel.exceptions import ParseError
from samuel.local.ring import PresentedLocalRing, QuotientIdeal
from samuel.utils.iter import take_blocks
from samuel.utils.string import validate_variable_name

RING_KEYS = ["field", "vars", "relations", "ideal", "expect"]
EXPECT_KEYS = ["e", "d", "depth_class", "eta"]
DEPTH_CLASSES = ["cm", "d-1", "lt"]


class RingDefinition(object):
    """Parsed ring definition: a field, variables, relations of ``J``, named
    ideals and ``expect`` metadata. Polynomial texts are parsed eagerly so
    errors carry line numbers; :meth:`build` creates the ring.

    :param name: instance name, empty for a single ring file
    """

    def __init__(self, name: str = ""):
        self.name = name
        self.field: Field = QQ
        self.variables: List[str] = []
        self.relations: List[str] = []
        self.ideals: Dict[str, List[str]] = {}
        self.expect: Dict[str, str] = {}
        self._ring: Optional[PolyRing] = None

    @property
    def poly_ring(self) -> PolyRing:
        if self._ring is None:
            self._ring = PolyRing(self.variables, self.field)
        return self._ring

    def set_field(self, field: Field) -> "RingDefinition":
        """Use ``field`` instead of the declared one"""
        self.field = field
        self._ring = None
        return self

    def build(self) -> Tuple[PresentedLocalRing, Dict[str, QuotientIdeal]]:
        """Create the presented ring and its named ideals"""
        ring = PresentedLocalRing(self.poly_ring, self.relations, name=self.name)
        return ring, {k: ring.ideal(v) for k, v in self.ideals.items()}

    def parameter_ideal_name(self) -> str:
        """``Q`` when defined, otherwise the first declared ideal"""
        if "Q" in self.ideals:
            return "Q"
        if len(self.ideals) == 0:
            raise ParseError(f"{self.name or 'ring'} declares no ideal")
        return next(iter(self.ideals))

    def expected_e(self) -> Optional[List[int]]:
        if "e" not in self.expect:
            return None
        return [int(x) for x in self.expect["e"].split(",")]

    def expected_int(self, key: str) -> Optional[int]:
        return int(self.expect[key]) if key in self.expect else None

    def to_text(self) -> str:
        """The definition in ring file format"""
        lines = [] if self.name == "" else [f"instance {self.name}"]
        lines.append(f"field {self.field}")
        lines.append("vars " + " ".join(self.variables))
        if len(self.relations) > 0:
            lines.append("relations " + ", ".join(self.relations))
        for k, v in self.ideals.items():
            lines.append(f"ideal {k} = " + ", ".join(v))
        for k, v in self.expect.items():
            lines.append(f"expect {k} = {v}")
        return "\n".join(lines) + "\n"


def parse_ring_definition(text: str) -> RingDefinition:
    """Parse a ring file, one declaration per line::

        field Q            # or: field Fp 32003
        vars x y z w
        relations x*y^3, x*z, x*w
        ideal Q = x - y, x - z, x - w

    :param text: file content
    :raises ParseError: on unknown keys or invalid declarations, with the line
    :return: the definition
    """
    lines = list(enumerate(text.splitlines(), start=1))
    res = RingDefinition()
    _parse_block(res, [(n, s) for n, s in lines if _strip(s) != ""])
    return res


def parse_corpus(text: str) -> List[RingDefinition]:
    """Parse a corpus file: ring definition blocks, each introduced by an
    ``instance NAME`` line and optionally followed by ``expect`` lines such as
    ``expect e = 1,0,3,3`` or ``expect depth_class = lt``

    :param text: file content
    :raises ParseError: on invalid blocks or duplicated names, with the line
    :return: the definitions in file order
    """
    lines = [
        (n, s) for n, s in enumerate(text.splitlines(), start=1) if _strip(s) != ""
    ]
    res: List[RingDefinition] = []
    names = set()
    for block in take_blocks(lines, lambda x: _key(x[1]) == "instance"):
        n, head = block[0]
        if _key(head) != "instance":
            raise ParseError(f"expected 'instance NAME', got {_strip(head)!r}", line=n)
        parts = _strip(head).split()
        if len(parts) != 2:
            raise ParseError("instance needs exactly one name", line=n)
        if parts[1] in names:
            raise ParseError(f"duplicated instance {parts[1]}", line=n)
        names.add(parts[1])
        definition = RingDefinition(parts[1])
        _parse_block(definition, block[1:])
        res.append(definition)
    return res


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _key(line: str) -> str:
    s = _strip(line)
    return s.split(None, 1)[0] if s != "" else ""


def _parse_block(res: RingDefinition, lines: List[Tuple[int, str]]) -> None:
    seen_vars = False
    for n, raw in lines:
        line = _strip(raw)
        key = _key(line)
        rest = line[len(key) :].strip()
        try:
            if key == "field":
                if seen_vars:
                    raise ParseError("field must precede vars")
                res.field = _parse_field(rest)
            elif key == "vars":
                if seen_vars:
                    raise ParseError("vars declared twice")
                res.variables = _parse_vars(rest)
                seen_vars = True
            elif key == "relations":
                _require_vars(seen_vars, key)
                res.relations += _parse_polys(res, rest)
            elif key == "ideal":
                _require_vars(seen_vars, key)
                name, value = _split_assignment(rest, key)
                if name in res.ideals:
                    raise ParseError(f"ideal {name} declared twice")
                res.ideals[name] = _parse_polys(res, value)
            elif key == "expect":
                name, value = _split_assignment(rest, key)
                _check_expect(name, value)
                res.expect[name] = value.replace(" ", "").lower()
            else:
                raise ParseError(f"unknown key {key!r}, use one of {RING_KEYS}")
        except ParseError as e:
            raise e.at_line(n)
    if not seen_vars:
        n = lines[-1][0] if len(lines) > 0 else None
        raise ParseError("missing vars declaration", line=n)


def _parse_field(expr: str) -> Field:
    try:
        return parse_field(expr)
    except ValueError as e:
        raise ParseError(str(e))


def _parse_vars(expr: str) -> List[str]:
    names = expr.replace(",", " ").split()
    if len(names) == 0:
        raise ParseError("vars needs at least one name")
    for v in names:
        if not validate_variable_name(v):
            raise ParseError(f"{v!r} is not a valid variable name")
    if len(set(names)) != len(names):
        raise ParseError(f"duplicated variable in {names}")
    return names


def _require_vars(seen: bool, key: str) -> None:
    if not seen:
        raise ParseError(f"{key} before vars")


def _parse_polys(res: RingDefinition, expr: str) -> List[str]:
    # keep the canonical text, parsing validates the names
    items = [p.strip() for p in expr.split(",")]
    out: List[str] = []
    for p in items:
        if p == "":
            continue
        out.append(str(res.poly_ring.parse(p)))
    return out


def _split_assignment(expr: str, key: str) -> Tuple[str, str]:
    if "=" not in expr:
        raise ParseError(f"{key} needs the form 'NAME = VALUE'")
    name, value = expr.split("=", 1)
    name = name.strip()
    if not validate_variable_name(name) and not name.replace("_", "").isalnum():
        raise ParseError(f"invalid {key} name {name!r}")
    return name, value.strip()


def _check_expect(name: str, value: str) -> None:
    if name not in EXPECT_KEYS:
        raise ParseError(f"unknown expectation {name!r}, use one of {EXPECT_KEYS}")
    try:
        if name == "e":
            [int(x) for x in value.split(",")]
        elif name in ["d", "eta"]:
            int(value)
    except ValueError:
        raise ParseError(f"invalid expectation {name} = {value}")
    if name == "depth_class" and value.strip().lower() not in DEPTH_CLASSES:
        raise ParseError(f"depth_class must be one of {DEPTH_CLASSES}")

