"""Sparse exterior algebra over a free module with polynomial coefficients.

Multivector represents sections of wedge powers of a rank-n module spanned
by e_1..e_n; Form represents the dual side spanned by eps^1..eps^n.  Both
store {strictly increasing 1-based index tuple -> Polynomial} and may mix
degrees.  The two classes share all structure but cannot be combined by
wedge or addition, which catches most frame-confusion bugs at the type
level.

Sign conventions, fixed once and tested against the contraction/sign
oracle suite:

* pairing is the determinant pairing, <eps^J, e_I> = delta_{IJ} on sorted
  index tuples;
* interior product contracts the FIRST slot,
  iota_{e_i}(eps^{j_1} ^ ... ^ eps^{j_k}) = sum_t (-1)^(t-1) delta_{i,j_t} (drop slot t),
  and composes first-wedge-factor-first:
  iota_{alpha ^ beta} = iota_beta o iota_alpha.
  The opposite composition order fails the top-contraction sign oracle
  already at rank 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .ring import Polynomial

Index = Tuple[int, ...]


class ExteriorError(ValueError):
    pass


def _check_index(index: Iterable[int], rank: int) -> Index:
    index = tuple(index)
    for a, b in zip(index, index[1:]):
        if a >= b:
            raise ExteriorError(f"index tuple {index!r} is not strictly increasing")
    if index and (index[0] < 1 or index[-1] > rank):
        raise ExteriorError(f"index tuple {index!r} out of range for rank {rank}")
    return index


def _merge_sign(left: Index, right: Index):
    """Sign and merged tuple for e_left ^ e_right, or None if they overlap."""
    if set(left) & set(right):
        return None
    sign = 1
    for j in right:
        bigger = sum(1 for i in left if i > j)
        if bigger & 1:
            sign = -sign
    return sign, tuple(sorted(left + right))


def _contract_sign(dual: Index, target: Index):
    """Sign and leftover tuple for contracting the dual monomial into target.

    Factors of the dual monomial contract one at a time, first factor
    first, each taking the first slot of what remains of the target.
    Returns None when some dual index is missing from the target.
    """
    remaining = list(target)
    sign = 1
    for j in dual:
        try:
            t = remaining.index(j)
        except ValueError:
            return None
        if t & 1:
            sign = -sign
        remaining.pop(t)
    return sign, tuple(remaining)


class GradedElement:
    """Shared implementation behind Multivector and Form."""

    __slots__ = ("rank", "variables", "terms")
    basis_symbol = "?"

    def __init__(self, rank: int, variables, terms: Dict[Index, Polynomial] | None = None):
        self.rank = int(rank)
        self.variables = tuple(variables)
        clean: Dict[Index, Polynomial] = {}
        if terms:
            for index, poly in terms.items():
                index = _check_index(index, self.rank)
                if poly.variables != self.variables:
                    raise ExteriorError(
                        f"coefficient context {poly.variables!r} does not match {self.variables!r}")
                if poly.is_zero():
                    continue
                if index in clean:
                    s = clean[index] + poly
                    if s.is_zero():
                        del clean[index]
                    else:
                        clean[index] = s
                else:
                    clean[index] = poly
        self.terms = clean

    @classmethod
    def _raw(cls, rank, variables, terms):
        self = object.__new__(cls)
        self.rank = rank
        self.variables = variables
        self.terms = terms
        return self

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, rank: int, variables):
        return cls._raw(int(rank), tuple(variables), {})

    @classmethod
    def scalar(cls, rank: int, variables, value):
        """Degree-0 element from a Polynomial, Fraction, or int."""
        variables = tuple(variables)
        if not isinstance(value, Polynomial):
            value = Polynomial.const(variables, value)
        if value.is_zero():
            return cls._raw(int(rank), variables, {})
        return cls._raw(int(rank), variables, {(): value})

    @classmethod
    def basis(cls, rank: int, variables, i: int):
        variables = tuple(variables)
        index = _check_index((i,), rank)
        return cls._raw(int(rank), variables, {index: Polynomial.const(variables, 1)})

    @classmethod
    def monomial(cls, rank: int, variables, index, coefficient):
        variables = tuple(variables)
        if not isinstance(coefficient, Polynomial):
            coefficient = Polynomial.const(variables, coefficient)
        return cls(rank, variables, {tuple(index): coefficient})

    # -- structure -----------------------------------------------------

    def _check_compatible(self, other: "GradedElement"):
        if type(self) is not type(other):
            raise ExteriorError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.rank != other.rank or self.variables != other.variables:
            raise ExteriorError("rank or variable context mismatch")

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return sorted({len(ix) for ix in self.terms})

    def max_degree(self) -> int:
        return max((len(ix) for ix in self.terms), default=0)

    def homogeneous(self, k: int):
        return type(self)._raw(
            self.rank, self.variables,
            {ix: p for ix, p in self.terms.items() if len(ix) == k})

    def coefficient(self, index) -> Polynomial:
        index = _check_index(index, self.rank)
        return self.terms.get(index, Polynomial.zero(self.variables))

    def scalar_part(self) -> Polynomial:
        return self.terms.get((), Polynomial.zero(self.variables))

    # -- linear operations ----------------------------------------------

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for ix, p in other.terms.items():
            s = out.get(ix)
            s = p if s is None else s + p
            if s.is_zero():
                out.pop(ix, None)
            else:
                out[ix] = s
        return type(self)._raw(self.rank, self.variables, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)._raw(self.rank, self.variables,
                               {ix: -p for ix, p in self.terms.items()})

    def scaled(self, factor):
        """Multiply every coefficient by a Polynomial, Fraction, or int."""
        if not isinstance(factor, Polynomial):
            if isinstance(factor, (int, Fraction)):
                if not factor:
                    return type(self)._raw(self.rank, self.variables, {})
                return type(self)._raw(self.rank, self.variables,
                                       {ix: p * factor for ix, p in self.terms.items()})
            raise ExteriorError(f"cannot scale by {type(factor).__name__}")
        if factor.variables != self.variables:
            raise ExteriorError("variable context mismatch in scaling")
        out = {}
        for ix, p in self.terms.items():
            q = p * factor
            if not q.is_zero():
                out[ix] = q
        return type(self)._raw(self.rank, self.variables, out)

    def __mul__(self, factor):
        return self.scaled(factor)

    __rmul__ = __mul__

    # -- wedge ----------------------------------------------------------

    def wedge(self, other: "GradedElement"):
        self._check_compatible(other)
        out: Dict[Index, Polynomial] = {}
        for i1, p1 in self.terms.items():
            for i2, p2 in other.terms.items():
                merged = _merge_sign(i1, i2)
                if merged is None:
                    continue
                sign, key = merged
                q = p1 * p2
                if sign < 0:
                    q = -q
                s = out.get(key)
                s = q if s is None else s + q
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return type(self)._raw(self.rank, self.variables, out)

    # -- comparison and printing ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return (type(self) is type(other) and self.rank == other.rank
                and self.variables == other.variables and self.terms == other.terms)

    def __hash__(self):
        return hash((type(self).__name__, self.rank, self.variables,
                     frozenset((ix, str(p)) for ix, p in self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for ix in sorted(self.terms, key=lambda t: (len(t), t)):
            p = self.terms[ix]
            if not ix:
                pieces.append(f"({p})")
                continue
            name = f"{self.basis_symbol}[{','.join(map(str, ix))}]"
            if p == Polynomial.const(self.variables, 1):
                pieces.append(name)
            else:
                pieces.append(f"({p})*{name}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class Multivector(GradedElement):
    """Section of the exterior algebra of the module itself (e-frame)."""

    basis_symbol = "e"


class Form(GradedElement):
    """Section of the exterior algebra of the dual module (eps-frame)."""

    basis_symbol = "eps"


def _dual_pair(theta, u):
    if theta.rank != u.rank or theta.variables != u.variables:
        raise ExteriorError("rank or variable context mismatch")


def interior_by_form(theta: Form, u: Multivector) -> Multivector:
    """iota_theta u: contract a form into a multivector, first slot first."""
    if not isinstance(theta, Form) or not isinstance(u, Multivector):
        raise ExteriorError("interior_by_form expects (Form, Multivector)")
    _dual_pair(theta, u)
    return _interior(theta, u, Multivector)


def interior_by_multivector(u: Multivector, theta: Form) -> Form:
    """iota_u theta: contract a multivector into a form, first slot first."""
    if not isinstance(u, Multivector) or not isinstance(theta, Form):
        raise ExteriorError("interior_by_multivector expects (Multivector, Form)")
    _dual_pair(u, theta)
    return _interior(u, theta, Form)


def _interior(dual: GradedElement, target: GradedElement, result_cls):
    out: Dict[Index, Polynomial] = {}
    for jx, pj in dual.terms.items():
        for kx, pk in target.terms.items():
            if len(jx) > len(kx):
                continue
            hit = _contract_sign(jx, kx)
            if hit is None:
                continue
            sign, rest = hit
            q = pj * pk
            if sign < 0:
                q = -q
            s = out.get(rest)
            s = q if s is None else s + q
            if s.is_zero():
                out.pop(rest, None)
            else:
                out[rest] = s
    return result_cls._raw(target.rank, target.variables, out)


def pairing(theta: Form, u: Multivector) -> Polynomial:
    """Determinant duality pairing, extended degreewise; mixed degrees pair to zero."""
    if not isinstance(theta, Form) or not isinstance(u, Multivector):
        raise ExteriorError("pairing expects (Form, Multivector)")
    _dual_pair(theta, u)
    total = Polynomial.zero(u.variables)
    for ix, p in theta.terms.items():
        q = u.terms.get(ix)
        if q is not None:
            total = total + p * q
    return total


@dataclass(frozen=True)
class FrameData:
    """Trivializing data: rank, base coordinates, and a constant density.

    omega is always eps^1 ^ ... ^ eps^n with coefficient 1 and vee the dual
    top multivector e_1 ^ ... ^ e_n, so <omega, vee> = 1 by construction.
    """

    rank: int
    variables: Tuple[str, ...]
    s_density: Polynomial = None  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        s = self.s_density
        if s is None:
            s = Polynomial.const(self.variables, 1)
            object.__setattr__(self, "s_density", s)
        if s.variables != self.variables:
            raise ExteriorError("density variable context mismatch")
        if not s.is_constant() or s.is_zero():
            raise ExteriorError("s_density must be a nonzero constant")

    @property
    def top_index(self) -> Index:
        return tuple(range(1, self.rank + 1))

    @property
    def omega(self) -> Form:
        return Form.monomial(self.rank, self.variables, self.top_index, 1)

    @property
    def vee(self) -> Multivector:
        return Multivector.monomial(self.rank, self.variables, self.top_index, 1)


def omega_sharp(frame: FrameData, u: Multivector) -> Form:
    """Omega-flat contraction u -> iota_u omega."""
    return interior_by_multivector(u, frame.omega)


def v_sharp(frame: FrameData, theta: Form) -> Multivector:
    """V-flat contraction theta -> iota_theta vee."""
    return interior_by_form(theta, frame.vee)


def inverse_omega_sharp(frame: FrameData, phi: Form) -> Multivector:
    """Inverse of omega_sharp, using V# o Omega# = (-1)^{k(n-1)} id degreewise."""
    n = frame.rank
    out = Multivector.zero(n, frame.variables)
    for j in phi.degrees():
        piece = v_sharp(frame, phi.homogeneous(j))
        if ((n - j) * (n - 1)) & 1:
            piece = -piece
        out = out + piece
    return out


def inverse_v_sharp(frame: FrameData, u: Multivector) -> Form:
    """Inverse of v_sharp, same sign rule with the two sides exchanged."""
    n = frame.rank
    out = Form.zero(n, frame.variables)
    for l in u.degrees():
        piece = omega_sharp(frame, u.homogeneous(l))
        if ((n - l) * (n - 1)) & 1:
            piece = -piece
        out = out + piece
    return out
