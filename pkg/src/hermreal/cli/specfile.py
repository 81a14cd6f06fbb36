"""Algebra spec files.

A spec file is line oriented. ``#`` starts a comment, ``[name]`` opens a
section and every other line is ``key = expression``.  Example::

    [field]
    number eps = eps^2 + eps + 1
    conj eps = eps^2
    variables = a, b

    [algebra]
    kind = symbol
    n = 3
    a = a
    b = b
    eps = eps

    [involution]
    x = x
    y = y

    [checks]
    gram
    reality expect=NOT_FORMALLY_REAL

Lines in ``[checks]`` are a check name followed by ``key=value`` options.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from ..algebra import CrossedProduct, SymbolAlgebra, cyclic_group, quaternion
from ..errors import HermrealError
from ..scalars import QQ, FunctionField, NumberField, SimpleExtension, TowerMap
from .expr import ParseError, evaluate, names_in, parse_expr

SECTIONS = ("field", "algebra", "involution", "basis", "checks", "certificate")
CHECKS = ("validate-involution", "validate-cocycle", "gram", "diagonalize", "reality",
          "crossinvo", "exti", "sohs-verify", "trace-form", "mainext-sample")


class ValidationError(ValueError):
    def __init__(self, section, message, line=None):
        self.section = section
        self.message = message
        self.line = line
        where = f"[{section}]" + (f" line {line}" if line is not None else "")
        super().__init__(f"{where}: {message}")


@dataclass
class Entry:
    key: str
    value: str
    line: int
    column: int


@dataclass
class CheckSpec:
    name: str
    options: dict
    line: int


@dataclass
class SpecDocument:
    sections: dict
    checks: list
    name: str = "<spec>"
    field: object = None
    algebra: object = None
    involution: object = None
    basis: list = None
    certificate: dict = None
    namespace: dict = dataclasses.field(default_factory=dict)

    @property
    def kind(self):
        return self.values("algebra").get("kind")

    def values(self, section):
        return {e.key: e.value for e in self.sections.get(section, [])}


# --- lexical layer ---------------------------------------------------------------

def split_lines(text):
    """``(sections, checks)`` with raw entries; no evaluation."""
    sections = {}
    checks = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError("unterminated section header", lineno, len(line) + 1)
            current = stripped[1:-1].strip()
            if current not in SECTIONS:
                raise ParseError(f"unknown section [{current}]", lineno, line.index("[") + 2)
            if current in sections:
                raise ParseError(f"duplicate section [{current}]", lineno, 1)
            sections[current] = []
            continue
        if current is None:
            raise ParseError("content before the first section", lineno, 1)
        if current == "checks":
            checks.append(_check_line(stripped, lineno, line.index(stripped[0]) + 1))
            continue
        if "=" not in line:
            raise ParseError("expected 'key = expression'", lineno, len(line) + 1)
        key, value = line.split("=", 1)
        if not key.strip():
            raise ParseError("missing key", lineno, 1)
        column = len(key) + 2 + (len(value) - len(value.lstrip()))
        sections[current].append(Entry(" ".join(key.split()), value.strip(), lineno, column))
    return sections, checks


def _check_line(text, lineno, column):
    name, *opts = text.split()
    if name not in CHECKS:
        raise ParseError(f"unknown check {name!r}", lineno, column)
    options = {}
    for opt in opts:
        if "=" not in opt:
            raise ParseError(f"check option {opt!r} is not key=value", lineno,
                             column + text.index(opt))
        k, v = opt.split("=", 1)
        options[k] = v
    return CheckSpec(name, options, lineno)


def _expr(entry, namespace, section):
    """Evaluate ``entry.value``; undefined names become ValidationErrors."""
    try:
        node = parse_expr(entry.value)
    except ParseError as exc:
        raise ParseError(exc.message, entry.line, entry.column + (exc.column or 1) - 1) from None
    missing = sorted(names_in(node) - set(namespace))
    if missing:
        raise ValidationError(section, f"undefined symbol {missing[0]!r} in {entry.key!r}",
                              entry.line)
    try:
        return evaluate(node, namespace)
    except (ArithmeticError, HermrealError, TypeError) as exc:
        raise ValidationError(section, f"cannot evaluate {entry.key!r}: {exc}", entry.line) from None


def _names(entry):
    out = [s.strip() for s in entry.value.split(",")]
    if not all(s.isidentifier() for s in out):
        raise ParseError("expected a comma separated list of names", entry.line, entry.column)
    return out


def _rationals(entry):
    parts = [s.strip() for s in entry.value.split(",")]
    try:
        return [Fraction(evaluate(parse_expr(p), {})) for p in parts]
    except (ParseError, ValueError, TypeError):
        raise ParseError("expected comma separated rationals", entry.line, entry.column) from None


# --- polynomials written as expressions ------------------------------------------

class _Poly:
    """Univariate polynomial with coefficients in ``F`` (low degree first);
    just enough arithmetic to read minimal polynomials."""

    def __init__(self, F, cs):
        self.F = F
        self.cs = [F(c) for c in cs]

    @classmethod
    def coerce(cls, F, v):
        return v if isinstance(v, _Poly) else cls(F, [v])

    def _trim(self):
        while len(self.cs) > 1 and self.cs[-1].is_zero():
            self.cs.pop()
        return self

    def __add__(self, o):
        o = _Poly.coerce(self.F, o)
        n = max(len(self.cs), len(o.cs))
        a = self.cs + [self.F.zero] * (n - len(self.cs))
        b = o.cs + [self.F.zero] * (n - len(o.cs))
        return _Poly(self.F, [x + y for x, y in zip(a, b)])._trim()

    __radd__ = __add__

    def __neg__(self):
        return _Poly(self.F, [-c for c in self.cs])

    def __sub__(self, o):
        return self + -_Poly.coerce(self.F, o)

    def __rsub__(self, o):
        return _Poly.coerce(self.F, o) - self

    def __mul__(self, o):
        o = _Poly.coerce(self.F, o)
        out = [self.F.zero] * (len(self.cs) + len(o.cs) - 1)
        for i, x in enumerate(self.cs):
            for j, y in enumerate(o.cs):
                out[i + j] = out[i + j] + x * y
        return _Poly(self.F, out)._trim()

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _Poly.coerce(self.F, o)
        if len(o.cs) != 1:
            raise TypeError("division by a non-constant polynomial")
        inv = o.cs[0].inverse()
        return _Poly(self.F, [c * inv for c in self.cs])

    def __pow__(self, k):
        if k < 0:
            raise TypeError("negative power of a polynomial")
        acc = _Poly(self.F, [1])
        for _ in range(k):
            acc = acc * self
        return acc


def _minpoly(entry, name, F, section):
    ns = {k: _Poly(F, [v]) for k, v in F.all_gens().items()}
    ns[name] = _Poly(F, [0, 1])
    p = _Poly.coerce(F, _expr(entry, ns, section))
    if len(p.cs) < 2:
        raise ValidationError(section, f"minimal polynomial of {name} is constant", entry.line)
    lead = p.cs[-1].inverse()
    return [c * lead for c in p.cs]


# --- building ------------------------------------------------------------------

def _keyed(entries, word):
    """Entries whose key is ``word NAME``."""
    out = []
    for e in entries:
        parts = e.key.split()
        if parts[0] == word:
            if len(parts) != 2 or not parts[1].isidentifier():
                raise ParseError(f"expected '{word} NAME'", e.line, 1)
            out.append((parts[1], e))
    return out


def build_field(entries):
    known = {"number", "conj", "embedding", "variables"}
    for e in entries:
        if e.key.split()[0] not in known:
            raise ValidationError("field", f"unknown key {e.key!r}", e.line)
    F = QQ
    numbers = _keyed(entries, "number")
    if len(numbers) > 1:
        raise ValidationError("field", "at most one number field generator", numbers[1][1].line)
    if numbers:
        name, e = numbers[0]
        cs = [c.as_rational() for c in _minpoly(e, name, QQ, "field")]
        try:
            F = NumberField(name, cs)
        except HermrealError as exc:
            raise ValidationError("field", str(exc), e.line) from None
        for ename, emb in _keyed(entries, "embedding"):
            if ename != name:
                raise ValidationError("field", f"undefined symbol {ename!r}", emb.line)
            try:
                F.add_embedding(*_rationals(emb))
            except (HermrealError, TypeError) as exc:
                raise ValidationError("field", str(exc), emb.line) from None
    for cname, e in _keyed(entries, "conj"):
        if cname not in F.all_gens():
            raise ValidationError("field", f"undefined symbol {cname!r}", e.line)
        img = F(_expr(e, F.all_gens(), "field"))
        try:
            F.set_involution(img)
        except HermrealError as exc:
            raise ValidationError("field", str(exc), e.line) from None
    for e in entries:
        if e.key == "variables":
            F = FunctionField(F, _names(e))
    return F


def _single(values, key, entries, section, required=True):
    for e in entries:
        if e.key == key:
            return e
    if required:
        raise ValidationError(section, f"missing key {key!r}")
    return None


def _int_entry(e, section):
    try:
        return int(e.value)
    except ValueError:
        raise ValidationError(section, f"{e.key} must be an integer", e.line) from None


def build_algebra(entries, F):
    vals = {e.key: e for e in entries}
    kind_e = _single(vals, "kind", entries, "algebra")
    kind = kind_e.value
    ns = dict(F.all_gens())
    try:
        if kind == "symbol":
            n = _int_entry(_single(vals, "n", entries, "algebra"), "algebra")
            a, b, eps = (F(_expr(_single(vals, k, entries, "algebra"), ns, "algebra"))
                         for k in ("a", "b", "eps"))
            g = vals.get("generators")
            names = tuple(_names(g)) if g else ("x", "y")
            return SymbolAlgebra(F, n, a, b, eps, names=names)
        if kind == "quaternion":
            a, b = (F(_expr(_single(vals, k, entries, "algebra"), ns, "algebra")) for k in ("a", "b"))
            g = vals.get("generators")
            names = tuple(_names(g)) if g else ("i", "j")
            K = None
            embs = [e for e in entries if e.key == "embedding"]
            if embs:
                if F is not QQ:
                    raise ValidationError("algebra", "subfield embeddings need base field Q",
                                          embs[0].line)
                K = NumberField(names[0], [-a.as_rational(), 0, 1],
                                [tuple(_rationals(e)) for e in embs])
            return quaternion(F, a, b, names=names, K=K)
        if kind == "crossed":
            return _build_crossed(entries, vals, F)
    except HermrealError as exc:
        raise ValidationError("algebra", str(exc), kind_e.line) from None
    raise ValidationError("algebra", f"unknown kind {kind!r}", kind_e.line)


def _build_crossed(entries, vals, F):
    subs = _keyed(entries, "subfield")
    if len(subs) != 1:
        raise ValidationError("algebra", "crossed products need one 'subfield NAME' line")
    tname, te = subs[0]
    cs = _minpoly(te, tname, F, "algebra")
    if F is QQ:
        embs = [tuple(_rationals(e)) for e in entries if e.key == "embedding"]
        K = NumberField(tname, [c.as_rational() for c in cs], embs)
    else:
        K = SimpleExtension(F, tname, cs)
    group_e = _single(vals, "group", entries, "algebra")
    parts = group_e.value.split()
    if len(parts) != 2 or parts[0] != "cyclic" or not parts[1].isdigit():
        raise ValidationError("algebra", "group must be 'cyclic N'", group_e.line)
    labels, table = cyclic_group(int(parts[1]))
    kns = dict(K.all_gens())
    actions = {}
    for g, e in _keyed(entries, "action"):
        if g not in labels:
            raise ValidationError("algebra", f"undefined symbol {g!r}", e.line)
        actions[g] = TowerMap(K, {tname: K(_expr(e, kns, "algebra"))})
    if len(labels) > 1 and "s" in actions:
        # fill powers of the generator by composition
        acc = actions["s"]
        for lab in labels[2:]:
            acc = acc.then(actions["s"])
            actions.setdefault(lab, acc)
    cocycle = {}
    for e in entries:
        parts = e.key.split(None, 1)
        if parts[0] == "cocycle":
            pair = [p.strip() for p in parts[1].split(",")] if len(parts) == 2 else []
            if len(pair) != 2 or not set(pair) <= set(labels):
                raise ValidationError("algebra", f"bad cocycle key {e.key!r}", e.line)
            cocycle[tuple(pair)] = K(_expr(e, kns, "algebra"))
    symbol = vals["symbol"].value if "symbol" in vals else "e"
    return CrossedProduct(K, labels, table, actions, cocycle, symbol=symbol)


def algebra_namespace(D):
    """Names usable in expressions over ``D``: field generators and the
    algebra generators (``k`` for quaternions)."""
    ns = {k: D(v) for k, v in D.F.all_gens().items()}
    if isinstance(D, CrossedProduct):
        ns[D.K.name] = D.from_K(D.K.gen)
        for g in D.group:
            ns[f"{D.symbol}_{g}"] = D.e(g)
    else:
        ns[D.names[0]] = D.x
        ns[D.names[1]] = D.y
        if D.n == 2 and D.eps == D.F(-1):
            ns.setdefault("k", D.x * D.y)
    return ns


def build_involution(entries, D, ns):
    valid = set(D.generator_names())
    images = {}
    for e in entries:
        if e.key not in valid:
            raise ValidationError("involution", f"undefined symbol {e.key!r}", e.line)
        images[e.key] = _expr(e, ns, "involution")
    try:
        if isinstance(D, CrossedProduct):
            k_image = images.pop(D.K.name, None)
            e_images = {k[len(D.symbol) + 1:]: v for k, v in images.items()}
            return D.involution(e_images, k_image, check=False)
        x = images.get(D.names[0], D.x)
        y = images.get(D.names[1], D.y)
        return D.involution(x, y, check=False)
    except HermrealError as exc:
        raise ValidationError("involution", str(exc), entries[0].line if entries else None) from None


def parse_spec(text, name="<spec>"):
    """Parse and validate a spec file, building field, algebra and involution."""
    sections, checks = split_lines(text)
    doc = SpecDocument(sections, checks, name)
    if "field" not in sections:
        raise ValidationError("field", "missing [field] section")
    if "algebra" not in sections:
        raise ValidationError("algebra", "missing [algebra] section")
    doc.field = build_field(sections["field"])
    doc.algebra = build_algebra(sections["algebra"], doc.field)
    ns = algebra_namespace(doc.algebra)
    doc.namespace = ns
    doc.involution = build_involution(sections.get("involution", []), doc.algebra, ns)
    if "basis" in sections:
        doc.basis = [doc.algebra(_expr(e, ns, "basis")) for e in sections["basis"]]
    if "certificate" in sections:
        cert = {"elements": [], "target": doc.algebra(0)}
        for e in sections["certificate"]:
            v = doc.algebra(_expr(e, ns, "certificate"))
            if e.key == "target":
                cert["target"] = v
            else:
                cert["elements"].append((e.key, v))
        doc.certificate = cert
    return doc


def load_spec(path):
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read(), name=str(path))
