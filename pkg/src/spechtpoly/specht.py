"""Specht and higher Specht polynomials, symmetrizers, and basis families.

The central construction: for a semistandard tableau S with partition
content and a bijective filling T of the same shape, the polynomial
F_T^S applies the Young symmetrizer of T (row symmetrization first,
then signed column antisymmetrization, both unnormalized) to the
monomial whose exponent at variable x_{T(cell)} is the cocharge label
of S at that cell.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import perms
from ._linalg import solve_in_span
from .perms import Perm
from .polyring import Poly, QQ, elementary, permute_variables
from .tableaux import (
    Partition,
    Tableau,
    check_partition,
    cocharge_label_tableau,
    cocharge_labels,
    descent_stats,
    enumerate_tableaux,
    format_tableau,
    last_letter_key,
    partitions,
    reading_word,
    semistandard_descents,
    standard_tableaux,
)

_ZERO = QQ(0)


# -- symmetrizers ------------------------------------------------------------


def _setwise_perms(groups: Sequence[Sequence[int]], n: int) -> list[Perm]:
    """All permutations of {1..n} (as 0-based tuples) permuting each group within itself."""
    per_group: list[list[tuple[tuple[int, int], ...]]] = []
    for g in groups:
        entries = tuple(g)
        images = [
            tuple(zip(entries, img)) for img in itertools.permutations(entries)
        ]
        per_group.append(images)
    out: list[Perm] = []
    for combo in itertools.product(*per_group):
        perm = list(range(n))
        for assignment in combo:
            for a, b in assignment:
                perm[a - 1] = b - 1
        out.append(tuple(perm))
    return out


def row_group(t: Tableau) -> list[tuple[int, ...]]:
    return [tuple(row) for row in t.rows]


def column_group(t: Tableau) -> list[tuple[int, ...]]:
    return [tuple(row) for row in t.transpose().rows]


def apply_symmetrizer(t: Tableau, p: Poly) -> Poly:
    """Apply the (unnormalized) Young symmetrizer of T.

    First sum over the row group, then the signed sum over the column
    group.  Scalars are kept as-is, so results carry factorial factors.
    """
    if not t.is_bijective():
        raise ValueError("symmetrizer needs a bijective filling")
    if t.size > p.nvars:
        raise ValueError("polynomial has too few variables for this tableau")
    n = p.nvars
    symmetrized = Poly.zero(n)
    for sigma in _setwise_perms(row_group(t), n):
        symmetrized = symmetrized + permute_variables(sigma, p)
    result = Poly.zero(n)
    for tau in _setwise_perms(column_group(t), n):
        term = permute_variables(tau, symmetrized)
        if perms.sign(tau) < 0:
            result = result - term
        else:
            result = result + term
    return result


# -- Specht polynomials ------------------------------------------------------


def specht_classical(t: Tableau) -> Poly:
    """Product over columns of the differences x_j - x_i for entries i < j."""
    if not t.is_bijective():
        raise ValueError("needs a bijective filling")
    n = t.size
    result = Poly.one(n)
    for col in column_group(t):
        for i, j in itertools.combinations(sorted(col), 2):
            result = result * (Poly.variable(j, n) - Poly.variable(i, n))
    return result


def _check_pair(s: Tableau, t: Tableau) -> None:
    if s.shape != t.shape:
        raise ValueError(
            f"shape mismatch: S has {s.shape}, T has {t.shape}"
        )
    if not (s.is_semistandard() and is_partition_content(s)):
        raise ValueError("S must be semistandard with partition content")
    if not t.is_bijective():
        raise ValueError("T must be a bijective filling")


def is_partition_content(s: Tableau) -> bool:
    content = s.content()
    return all(content[i] >= content[i + 1] for i in range(len(content) - 1)) and all(
        c > 0 for c in content
    )


def tagged_monomial(s: Tableau, t: Tableau) -> Poly:
    """The monomial whose exponent at x_{T(cell)} is the cocharge label of S there."""
    labels = cocharge_label_tableau(s)
    n = t.size
    exp = [0] * n
    for r, row in enumerate(t.rows):
        for c, entry in enumerate(row):
            exp[entry - 1] = labels[r][c]
    return Poly.monomial(exp)


def higher_specht(s: Tableau, t: Tableau) -> Poly:
    """F_T^S: the symmetrizer of T applied to the cocharge-label monomial of S.

    T may be any bijective filling (for standard T these span the classical
    module); the result is homogeneous of degree cocharge(S).
    """
    _check_pair(s, t)
    return apply_symmetrizer(t, tagged_monomial(s, t))


def dual_specht(s: Tableau, t: Tableau) -> Poly:
    """G_T^S: the transposed symmetrizer applied to the complementary monomial.

    The exponent at x_{T(cell)} is T(cell) - 1 - (cocharge label of S at
    the cell); together with the F-side monomial this multiplies to the
    staircase x2 x3^2 ... xn^(n-1).  Raises when some exponent is negative.
    """
    _check_pair(s, t)
    if not t.is_standard():
        raise ValueError("the dual construction needs T standard")
    labels = cocharge_label_tableau(s)
    n = t.size
    exp = [0] * n
    for r, row in enumerate(t.rows):
        for c, entry in enumerate(row):
            e = entry - 1 - labels[r][c]
            if e < 0:
                raise ValueError(
                    f"dual polynomial undefined: exponent {e} at entry {entry}"
                )
            exp[entry - 1] = e
    return apply_symmetrizer(t.transpose(), Poly.monomial(exp))


def bilinear_form(f: Poly, g: Poly):
    """The alternating staircase pairing of two polynomials.

    <f, g> antisymmetrizes f*g, divides by the Vandermonde determinant
    and takes the constant term; concretely it is the signed sum of the
    coefficients of f*g on the staircase exponent permutations.
    """
    if f.nvars != g.nvars:
        raise ValueError("polynomials live in different variable counts")
    n = f.nvars
    product = f * g
    if product.is_zero:
        return _ZERO
    target = n * (n - 1) // 2
    if all(sum(e) != target for e in product.terms):
        return _ZERO
    total = _ZERO
    for sigma in perms.all_permutations(n):
        exp = [0] * n
        for i, si in enumerate(sigma):
            exp[si] = n - 1 - i
        c = product.terms.get(tuple(exp))
        if c is not None:
            total = total + (c if perms.sign(sigma) > 0 else -c)
    return total


def garnir_apply(t: Tableau, a: int, b: int, row: int, p: Poly) -> Poly:
    """Signed sum over the Garnir set of columns a < b at the pivot row.

    The moved entries are those of column a weakly above ``row`` together
    with those of column b weakly below it (1-based columns and row).
    Applied to any F_T^S of matching shape the result vanishes.
    """
    if not t.is_bijective():
        raise ValueError("needs a bijective filling")
    shape = t.shape
    conj = tuple(sum(1 for q in shape if q > c) for c in range(shape[0] if shape else 0))
    if not 1 <= a < b <= (shape[0] if shape else 0):
        raise ValueError(f"need columns 1 <= a < b <= {shape[0]}")
    if not 1 <= row <= conj[b - 1]:
        raise ValueError(f"row {row} does not meet column {b}")
    entries = [t.rows[r][a - 1] for r in range(row - 1, conj[a - 1])]
    entries += [t.rows[r][b - 1] for r in range(0, row)]
    n = p.nvars
    result = Poly.zero(n)
    for image in itertools.permutations(entries):
        perm = list(range(n))
        for x, y in zip(entries, image):
            perm[x - 1] = y - 1
        term = permute_variables(tuple(perm), p)
        if perms.sign(tuple(perm)) < 0:
            result = result - term
        else:
            result = result + term
    return result


# -- straightening -----------------------------------------------------------


def _poly_to_vector(p: Poly, index: dict) -> list:
    vec = [_ZERO] * len(index)
    for e, c in p.terms.items():
        vec[index[e]] = c
    return vec


def straighten(s: Tableau, t: Tableau) -> tuple:
    """Expand F_T^S over the standard tableaux of the shape (last letter order).

    T may be an arbitrary bijective filling.  Returns the coefficient
    tuple aligned with ``standard_tableaux(shape)``.  Raises
    ArithmeticError if the polynomial were outside the span (it never is).
    """
    _check_pair(s, t)
    shape = t.shape
    stds = standard_tableaux(shape)
    basis = [higher_specht(s, std) for std in stds]
    target = higher_specht(s, t)
    support = sorted({e for p in basis + [target] for e in p.terms})
    index = {e: i for i, e in enumerate(support)}
    columns = [_poly_to_vector(p, index) for p in basis]
    solution = solve_in_span(columns, [_poly_to_vector(target, index)])
    if solution is None:
        raise ArithmeticError(
            "polynomial does not lie in the span of the standard ones"
        )
    return tuple(solution[0])


# -- basis families ----------------------------------------------------------


@dataclass(frozen=True)
class BasisElement:
    """One spanning-set element: a polynomial plus the data that names it."""

    poly: Poly
    degree: int
    s: Tableau | None = None
    t: Tableau | None = None
    exponents: tuple[int, ...] = ()
    xpower: int = 0

    def label(self) -> dict:
        out: dict = {"degree": self.degree}
        if self.s is not None:
            out["shape"] = list(self.s.shape)
            out["S"] = format_tableau(self.s)
        if self.t is not None:
            out["T"] = format_tableau(self.t)
        if any(self.exponents):
            out["exponents"] = list(self.exponents)
        if self.xpower:
            out["xpower"] = self.xpower
        return out


def _s_sort_key(s: Tableau):
    return (tuple(-p for p in s.shape), reading_word(s))


def family_sort_key(be: BasisElement):
    return (
        be.degree,
        _s_sort_key(be.s) if be.s is not None else ((), ()),
        last_letter_key(be.t) if be.t is not None else (),
        be.exponents,
        be.xpower,
    )


def _bounded_tuples(length: int, bound: int) -> Iterable[tuple[int, ...]]:
    """All nonnegative integer tuples of the given length with sum < bound."""
    if bound <= 0:
        return
    if length == 0:
        yield ()
        return
    for total in range(bound):
        for cuts in itertools.combinations(range(total + length - 1), length - 1):
            prev = -1
            parts = []
            for cut in cuts + (total + length - 1,):
                parts.append(cut - prev - 1)
                prev = cut
            yield tuple(parts)


def _efactor(exponents: Sequence[int], n: int) -> Poly:
    out = Poly.one(n)
    for j, e in enumerate(exponents, start=1):
        if e:
            out = out * elementary(j, n) ** e
    return out


def _pairs_standard(n: int):
    for shape in partitions(n):
        stds = standard_tableaux(shape)
        for s in stds:
            for t in stds:
                yield s, t


def _pairs_content(mu: Partition):
    n = sum(mu)
    for shape in partitions(n):
        semis = enumerate_tableaux(shape, mu, flavor="semistandard")
        if not semis:
            continue
        stds = standard_tableaux(shape)
        for s in semis:
            for t in stds:
                yield s, t


def build_basis_family(kind: str, **params) -> list[BasisElement]:
    """Construct a spanning family for one of the quotient rings.

    kind="Bn" (params: n): pairs of standard tableaux.
    kind="Bnk" (n, k): standard pairs times e_1..e_{n-k} monomials with
        exponent sum below k - des(S).
    kind="Bnks" (n, k, s): same bound, exponents on e_1..e_{n-s}.
    kind="Bmu" (mu): semistandard S of content mu against standard T.
    kind="Bnkmu" (n, k, mu): mu must be the single part (n-1); content
        (n-1, 1) pairs times powers of e_1 with exponent below k - des(S).
    Elements come back sorted by (degree, S, T, exponents).
    """
    out: list[BasisElement] = []
    if kind == "Bn":
        n = params.pop("n")
        _no_extra(params)
        for s, t in _pairs_standard(n):
            cc = cocharge_labels(reading_word(s)).cocharge
            out.append(BasisElement(higher_specht(s, t), cc, s, t))
    elif kind in ("Bnk", "Bnks"):
        n = params.pop("n")
        k = params.pop("k")
        s_param = k if kind == "Bnk" else params.pop("s")
        _no_extra(params)
        if not (0 <= s_param <= k <= n):
            raise ValueError("need 0 <= s <= k <= n")
        width = n - s_param
        for s, t in _pairs_standard(n):
            des = descent_stats(s).des
            cc = cocharge_labels(reading_word(s)).cocharge
            base = higher_specht(s, t)
            for exps in _bounded_tuples(width, k - des):
                poly = base * _efactor(exps, n) if any(exps) else base
                degree = cc + sum(j * e for j, e in enumerate(exps, start=1))
                out.append(BasisElement(poly, degree, s, t, exps))
    elif kind == "Bmu":
        mu = check_partition(params.pop("mu"))
        _no_extra(params)
        for s, t in _pairs_content(mu):
            cc = cocharge_labels(reading_word(s)).cocharge
            out.append(BasisElement(higher_specht(s, t), cc, s, t))
    elif kind == "Bnkmu":
        n = params.pop("n")
        k = params.pop("k")
        mu = check_partition(params.pop("mu"))
        _no_extra(params)
        if mu != (n - 1,):
            raise ValueError(
                "this family is defined for the single-part mu = (n-1)"
            )
        if not 1 <= k <= n:
            raise ValueError("need 1 <= k <= n")
        for s, t in _pairs_content((n - 1, 1)):
            des = semistandard_descents(s)
            cc = cocharge_labels(reading_word(s)).cocharge
            base = higher_specht(s, t)
            for i in range(max(0, k - des)):
                poly = base * _efactor((i,), n) if i else base
                out.append(BasisElement(poly, cc + i, s, t, (i,)))
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    out.sort(key=family_sort_key)
    return out


def _no_extra(params: dict) -> None:
    if params:
        raise TypeError(f"unexpected parameters: {sorted(params)}")
