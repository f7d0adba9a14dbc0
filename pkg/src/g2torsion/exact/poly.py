"""Polynomials over the rationals in the fixed parameter list.

Polynomials are elements of one shared sparse ring (sympy's ``PolyRing`` over
QQ with graded-lexicographic order). Rational scalars are ``fractions.Fraction``
and mix freely with ring elements in arithmetic.
"""
from __future__ import annotations

import ast
from fractions import Fraction
from functools import reduce
from typing import Mapping, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

PARAMS: tuple[str, ...] = ("a", "b", "c", "d", "p", "q", "r", "x", "y", "z", "u", "v", "s")

RING, *_GENS = ring(",".join(PARAMS), QQ, grlex)
GENS: dict[str, PolyElement] = dict(zip(PARAMS, _GENS))

Poly = PolyElement
Scalar = Fraction
Coeff = Union[int, Fraction, PolyElement]


def param(name: str) -> PolyElement:
    try:
        return GENS[name]
    except KeyError:
        raise ValueError(f"unknown parameter {name!r}; expected one of {PARAMS}") from None


def params(names: str) -> tuple[PolyElement, ...]:
    """``params("a b c")`` returns the three generators."""
    return tuple(param(n) for n in names.replace(",", " ").split())


def to_fraction(x) -> Fraction:
    """Convert an int, Fraction, mpq or constant polynomial to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, PolyElement):
        if not x.is_ground:
            raise ValueError(f"polynomial {x} is not constant")
        x = x.LC
    try:
        return Fraction(int(x.numerator), int(x.denominator))
    except AttributeError:
        raise TypeError(f"cannot convert {type(x).__name__} to a rational") from None


def as_poly(x: Coeff) -> PolyElement:
    if isinstance(x, PolyElement):
        return x
    f = to_fraction(x)
    return RING(QQ(f.numerator, f.denominator))


def is_constant(x) -> bool:
    if isinstance(x, PolyElement):
        return x.is_ground
    return True


def simplify(x: Coeff) -> Coeff:
    """Collapse constant polynomials to Fractions; leave others untouched."""
    if isinstance(x, PolyElement) and x.is_ground:
        return to_fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    return x


def variables(x: Coeff) -> tuple[str, ...]:
    """Parameter names that occur in ``x``, in the fixed order."""
    if not isinstance(x, PolyElement) or not x:
        return ()
    used = reduce(lambda acc, m: [u or e for u, e in zip(acc, m)], x.monoms(), [0] * len(PARAMS))
    return tuple(n for n, e in zip(PARAMS, used) if e)


def total_degree(x: Coeff) -> int:
    if not isinstance(x, PolyElement):
        return 0 if x else -1
    if not x:
        return -1
    return max(sum(m) for m in x.monoms())


def poly_substitute(p: Coeff, bindings: Mapping[str, Coeff]) -> Coeff:
    """Simultaneously substitute parameters by scalars or polynomials."""
    if not isinstance(p, PolyElement):
        return simplify(p)
    pairs = [(param(k), as_poly(v)) for k, v in bindings.items()]
    if not pairs:
        return simplify(p)
    return simplify(p.compose(pairs))


def substitute_cleared(p: Coeff, numerators: Mapping[str, Coeff], denominator: Coeff) -> Coeff:
    """Substitute ``name -> numerators[name] / denominator`` and clear denominators.

    Returns ``denominator**deg(p) * p(numerators/denominator)``, which is a
    polynomial; it vanishes exactly when the rational substitution is a root.
    """
    p = as_poly(p)
    if not p:
        return Fraction(0)
    deg = total_degree(p)
    den = as_poly(denominator)
    out = RING(0)
    for monom, coeff in p.terms():
        term = RING(coeff)
        for name, e in zip(PARAMS, monom):
            if not e:
                continue
            if name in numerators:
                term = term * as_poly(numerators[name]) ** e
            else:
                term = term * GENS[name] ** e * den**e
        out += term * den ** (deg - sum(monom))
    return simplify(out)


def linear_coefficients(p: Coeff, names: tuple[str, ...]) -> tuple[dict[str, Coeff], Coeff]:
    """Split ``p`` as sum(coeff[n] * n) + rest, where rest is free of ``names``.

    Raises if ``p`` is not affine-linear in the given parameters (coefficients
    may involve the other parameters).
    """
    p = as_poly(p)
    idx = {n: PARAMS.index(n) for n in names}
    coeffs: dict[str, PolyElement] = {n: RING(0) for n in names}
    rest = RING(0)
    for monom, c in p.terms():
        hits = [n for n, i in idx.items() if monom[i]]
        if not hits:
            rest += RING({monom: c})
            continue
        if len(hits) > 1 or monom[idx[hits[0]]] > 1:
            raise ValueError(f"{p} is not linear in {names}")
        m = list(monom)
        m[idx[hits[0]]] = 0
        coeffs[hits[0]] += RING({tuple(m): c})
    return {n: simplify(c) for n, c in coeffs.items()}, simplify(rest)


def format_coeff(x: Coeff) -> str:
    """Canonical text for a scalar or polynomial (Python-expression syntax)."""
    if isinstance(x, PolyElement):
        if x.is_ground:
            return format_coeff(to_fraction(x))
        return str(x)
    f = to_fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


class ExpressionError(ValueError):
    pass


def evaluate_expression(text: str, names: Mapping[str, object] | None = None):
    """Evaluate an arithmetic expression over Fractions and ring parameters.

    Supported syntax: integers, parameter names, ``+ - * /`` (division by
    scalars only), ``**`` or ``^`` with non-negative integer exponents (between two
    non-scalar operands ``^`` is passed to the operands' ``__xor__``), and
    parentheses. Extra ``names`` (for example basis forms) may be supplied.
    """
    names = names if names is not None else {}
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id in names:
                return names[node.id]
            if node.id in GENS:
                return GENS[node.id]
            raise ExpressionError(f"unknown symbol {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if isinstance(right, PolyElement) and not right.is_ground:
                    raise ExpressionError("division by a non-constant polynomial")
                right = to_fraction(right)
                if right == 0:
                    raise ExpressionError("division by zero")
                return left * (1 / right)
            if isinstance(node.op, ast.Pow):
                if not isinstance(right, (int, Fraction, PolyElement)):
                    return left ^ right  # wedge of forms
                exp = to_fraction(right)
                if exp.denominator != 1 or exp < 0:
                    raise ExpressionError("exponents must be non-negative integers")
                return left ** int(exp)
        raise ExpressionError(f"unsupported syntax in {text!r}")

    return ev(tree)


def parse_poly(text: str) -> Coeff:
    value = evaluate_expression(text)
    if not isinstance(value, (Fraction, PolyElement)):
        raise ExpressionError(f"{text!r} is not a polynomial")
    return simplify(value)
