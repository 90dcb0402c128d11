"""JSON input documents and resolution of the ambient cyclotomic field.

algebra.json  {"q": scalar, "h": [[exp, scalar], ...] or "polynomial in t"}
taft.json     {"n": int, "m": int, "lambda": scalar}
spec.json     {"kind": "eta", "gamma": s, "mu": s, "phi": [[exp, s], ...]}
              {"kind": "omega", "gamma": "-1", "mu": s, "alpha11": [[exp, s], ...], "sign": +-1}

Scalars are literals (see parsing) or plain integers.  The ambient order N is
lcm(2, n, every M appearing as z[M]); a bare z means zeta_N.  After parsing,
N must equal lcm(n, ord q, 2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

from .gwa import GwaAlgebra
from .hopfact import ActionSpec, EtaSpec, OmegaSpec, TaftAlgebra
from .parsing import literal_orders, parse_scalar, parse_tpoly
from .qpoly import TPoly
from .scalars import CyclotomicField, field, lcm

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def load_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def _literals(value: Any) -> Iterable[str]:
    if isinstance(value, str):
        yield value
    elif isinstance(value, (list, tuple)):
        for v in value:
            yield from _literals(v)
    elif isinstance(value, dict):
        for v in value.values():
            yield from _literals(v)


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise InputError(f"{where}: missing field {key!r}")
    return doc[key]


def scalar_from(value: Any, fld: CyclotomicField, where: str):
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a scalar, got {value!r}")
    if isinstance(value, int):
        return fld.from_rational(value)
    if isinstance(value, str):
        return parse_scalar(value, fld)
    raise InputError(f"{where}: expected a scalar literal, got {value!r}")


def tpoly_from(value: Any, fld: CyclotomicField, where: str) -> TPoly:
    if isinstance(value, str):
        return parse_tpoly(value, fld)
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list of [exponent, scalar] pairs")
    pairs = []
    for item in value:
        if (not isinstance(item, list) or len(item) != 2 or not isinstance(item[0], int)
                or isinstance(item[0], bool) or item[0] < 0):
            raise InputError(f"{where}: bad term {item!r}; expected [non-negative exponent, scalar]")
        pairs.append((item[0], scalar_from(item[1], fld, where)))
    return TPoly.from_pairs(fld, pairs)


@dataclass
class Session:
    N: int
    field: CyclotomicField
    algebra: GwaAlgebra | None = None
    taft: TaftAlgebra | None = None
    spec: ActionSpec | None = None


def resolve(algebra_doc: dict | None = None, taft_doc: dict | None = None,
            spec_doc: dict | None = None, literals: Iterable[str] = (), n: int | None = None) -> Session:
    """Build the ambient field and parse whichever documents are given."""
    if taft_doc is not None:
        n_doc = _require(taft_doc, "n", "taft")
        if not isinstance(n_doc, int) or isinstance(n_doc, bool) or n_doc < 1:
            raise InputError("taft: n must be a positive integer")
        if n is not None and n != n_doc:
            raise InputError(f"conflicting n: {n} and {n_doc}")
        n = n_doc
    orders = [2] + ([n] if n else [])
    for doc in (algebra_doc, taft_doc, spec_doc):
        if doc is not None:
            for lit in _literals(doc):
                orders += literal_orders(lit)
    for lit in literals:
        orders += literal_orders(lit)
    N = lcm(*orders)
    fld = field(N)
    sess = Session(N, fld)

    if algebra_doc is not None:
        q = scalar_from(_require(algebra_doc, "q", "algebra"), fld, "algebra.q")
        h = tpoly_from(_require(algebra_doc, "h", "algebra"), fld, "algebra.h")
        sess.algebra = GwaAlgebra(q, h)
        want = lcm(n or 1, sess.algebra.q_order, 2)
        if want != N:
            raise InputError(
                f"ambient order N = {N} differs from lcm(n, ord q, 2) = {want}; "
                "write roots of unity so that every z[M] has M dividing lcm(n, ord q, 2)")

    if taft_doc is not None:
        m = _require(taft_doc, "m", "taft")
        if not isinstance(m, int) or isinstance(m, bool):
            raise InputError("taft: m must be an integer")
        lam = scalar_from(_require(taft_doc, "lambda", "taft"), fld, "taft.lambda")
        sess.taft = TaftAlgebra(n, m, lam)

    if spec_doc is not None:
        sess.spec = spec_from(spec_doc, fld, sess.algebra)
    return sess


def spec_from(doc: dict, fld: CyclotomicField, A: GwaAlgebra | None) -> ActionSpec:
    kind = _require(doc, "kind", "spec")
    gamma = scalar_from(_require(doc, "gamma", "spec"), fld, "spec.gamma")
    mu = scalar_from(_require(doc, "mu", "spec"), fld, "spec.mu")
    if kind == "eta":
        phi = tpoly_from(_require(doc, "phi", "spec"), fld, "spec.phi")
        return EtaSpec(gamma, mu, phi)
    if kind == "omega":
        a11 = tpoly_from(_require(doc, "alpha11", "spec"), fld, "spec.alpha11")
        sign = doc.get("sign")
        if sign is None:
            if A is None:
                raise InputError("spec: sign is required without an algebra")
            twisted = A.sigma(a11)
            if twisted == a11:
                sign = 1
            elif twisted == -a11:
                sign = -1
            else:
                raise InputError("spec: sigma(alpha11) is neither alpha11 nor -alpha11")
        rule = doc.get("alpha21_rule", "theorem")
        return OmegaSpec(gamma, mu, a11, sign, rule)
    raise InputError(f"spec: unknown kind {kind!r} (expected 'eta' or 'omega')")


def dump(doc: dict) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def envelope(command: str, N: int, body: dict) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "command": command, "ambient_N": N}
    out.update(body)
    return out
