"""The ten end-to-end acceptance checks, each with a time budget.

Used by ``tests/test_acceptance.py`` and by ``gl2hopf verify all``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .adjoint import (
    adjoint_blocks,
    adjoint_gl2_coords,
    adjoint_gl2_points,
    adjoint_restrictions,
    adjoint_sl2,
    adjoint_sl2_from_gl2,
    adjoint_weights,
    sl2_adjoint_blocks,
    sl2_adjoint_weights,
)
from .algebra import CoeffRing
from .comodule import dual, is_closed, restrict, standard, sub_comodule, sym_power, verify_comodule
from .distributions import (
    Dist,
    bracket,
    bracket_table,
    dist_basis,
    dist_to_matrix,
    gl2_matrix_bracket,
    jacobi_defects,
    sl2_to_gl2,
)
from .hopf import build_hopf, gl2_hopf, quotient_map, verify_hopf_axioms, weyl_inclusion
from .morphism import dual_iso_check, hom_space, is_morphism, iso_exists, sym_pair
from .points import hopf_points_consistency, normalizer_check, order_check, root_coroot_check, splitting_check
from .quotient import free_basis_check, invariant_subalgebra_check, weyl_constant_scheme_check
from .report import Report
from .weights import (
    character,
    extract_weights,
    is_irreducible_block,
    refined_character,
    refined_decompose,
    sym_character,
)

Z = CoeffRing.integers()
Q = CoeffRing.rationals()


def _sym_over_n(d: int, ring: CoeffRing = Z):
    """Sym^d(V) built over k[GL2], then pushed to k[N] and k[T]."""
    G = gl2_hopf(ring)
    W = sym_power(standard(G), d)
    WN = restrict(W, quotient_map("GL2", "G", "N", ring))
    WT = restrict(WN, quotient_map("GL2", "N", "T", ring))
    return W, WN, WT


def c1_hopf_axioms() -> Report:
    rep = Report("Hopf axioms over Z")
    for group in ("GL2", "SL2"):
        for kind in ("G", "N", "T", "NmodT"):
            rep.merge(verify_hopf_axioms(build_hopf(group, kind, Z)), f"{group} {kind}")
    return rep


def c2_refined_characters(dmax: int = 16) -> Report:
    rep = Report(f"refined characters of Sym^d(V), d <= {dmax}")
    for d in range(dmax + 1):
        _, WN, WT = _sym_over_n(d)
        w = extract_weights(WT)
        blocks = refined_decompose(WN, w)
        want = [refined_character(d, i) for i in range(d // 2 + 1)]
        got = [b.character() for b in blocks]
        total = character(w)
        rep.add(f"d={d}: block characters", got == want, f"{len(blocks)} blocks")
        rep.add(f"d={d}: blocks sum to the character", sum(got[1:], got[0]) == total == sym_character(d))
    return rep


def c3_block_closure(dmax: int = 12) -> Report:
    rep = Report(f"Weyl-orbit blocks of Sym^d(V)|N are subcomodules, d <= {dmax}")
    for d in range(dmax + 1):
        _, WN, WT = _sym_over_n(d)
        w = extract_weights(WT)
        orbits = {}
        for i, x in enumerate(w):
            orbits.setdefault(frozenset({x, (x[1], x[0])}), []).append(i)
        ok = all(is_closed(WN, idx) for idx in orbits.values())
        rep.add(f"d={d}: {len(orbits)} blocks closed", ok)
    return rep


def c4_irreducibility(dmax: int = 8) -> Report:
    rep = Report(f"blocks of Sym^d(V) are irreducible over k[N], d <= {dmax}")
    for ring in (Q, CoeffRing.prime_field(2), CoeffRing.prime_field(3), CoeffRing.prime_field(5)):
        bad, disagree, count = [], [], 0
        for d in range(dmax + 1):
            _, WN, WT = _sym_over_n(d, ring)
            for b in refined_decompose(WN, extract_weights(WT)):
                count += 1
                r = is_irreducible_block(b.comodule, "constraints")
                if not r.irreducible:
                    bad.append((d, b.index))
                if ring.kind == "F":
                    r2 = is_irreducible_block(b.comodule, "lines")
                    if r2.irreducible != r.irreducible or r2.stable_lines != r.stable_lines:
                        disagree.append((d, b.index))
        rep.add(f"{ring}: every block irreducible (constraint method)", not bad, f"{count} blocks" if not bad else str(bad))
        if ring.kind == "F":
            rep.add(f"{ring}: line enumeration agrees", not disagree, str(disagree) if disagree else "")
    return rep


# [z_i, z_j] for i < j, as coefficient vectors on z0..z4
GL2_BRACKETS = {
    (0, 1): (0, 0, 0, 0, 0), (0, 2): (0, 0, 0, 0, 0), (0, 3): (0, 0, 0, 0, 0), (0, 4): (0, 0, 0, 0, 0),
    (1, 2): (0, 0, 1, 0, 0), (1, 3): (0, 0, 0, -1, 0), (1, 4): (0, 0, 0, 0, 0),
    (2, 3): (0, 1, 0, 0, -1), (2, 4): (0, 0, 1, 0, 0), (3, 4): (0, 0, 0, -1, 0),
}
# on w0, x, H, y
SL2_BRACKETS = {
    (0, 1): (0, 0, 0, 0), (0, 2): (0, 0, 0, 0), (0, 3): (0, 0, 0, 0),
    (1, 2): (0, -2, 0, 0), (1, 3): (0, 0, 1, 0), (2, 3): (0, 0, 0, -2),
}


def c5_distributions() -> Report:
    rep = Report("Dist_1 brackets")
    table = bracket_table("GL2")
    wrong = [k for k, v in GL2_BRACKETS.items() if table[k].coeffs != v]
    rep.add("GL2 bracket table", not wrong, str(wrong) if wrong else "10 entries")
    sl = bracket_table("SL2")
    wrong = [k for k, v in SL2_BRACKETS.items() if sl[k].coeffs != v]
    rep.add("SL2 bracket table", not wrong, str(wrong) if wrong else "6 entries")
    for group in ("GL2", "SL2"):
        B = dist_basis(group)
        anti = all(bracket(a, a, group).is_zero() and (bracket(a, b, group) + bracket(b, a, group)).is_zero()
                   for a in B for b in B)
        rep.add(f"{group}: antisymmetric", anti)
        bad = jacobi_defects(group)
        rep.add(f"{group}: Jacobi identity on all basis triples", not bad, str(bad[:3]))
    B = dist_basis("SL2")
    pres = all(sl2_to_gl2(bracket(a, b, "SL2")) == bracket(sl2_to_gl2(a), sl2_to_gl2(b), "GL2") for a in B for b in B)
    rep.add("g: Dist_1(SL2) -> Dist_1(GL2) preserves brackets", pres)
    rep.add("g(H) = z1 - z4", sl2_to_gl2(B[2]) == Dist((0, 1, 0, 0, -1)))
    G = dist_basis("GL2")
    f_ok = all(dist_to_matrix(bracket(G[i], G[j])) == gl2_matrix_bracket(i, j) for i in range(5) for j in range(5))
    rep.add("f identifies the bracket with the matrix commutator", f_ok)
    return rep


def c6_adjoint() -> Report:
    rep = Report("adjoint comodule")
    P = adjoint_gl2_points(Z)
    C = adjoint_gl2_coords(Z)
    rep.merge(C.report, "coordinates")
    rep.add("points construction is a comodule", verify_comodule(P).ok)
    rep.add("dual of the I/I^2 comodule equals the points construction", C.dual.same_matrix(P))
    _, AdT = adjoint_restrictions(Z)
    w = adjoint_weights(Z)
    rep.add("T-weights are (0,0), (-1,1), (1,-1), (0,0) as a multiset",
            sorted(w) == sorted([(0, 0), (-1, 1), (1, -1), (0, 0)]), str(w))
    T = AdT.carrier
    diag = [T.one(), T.mono(0, (1, -1)), T.mono(0, (-1, 1)), T.one()]
    rep.add("Ad over k[T] is diag(1, t1 t2^-1, t1^-1 t2, 1)",
            all(AdT.matrix[i][j] == (diag[i] if i == j else T.zero()) for i in range(4) for j in range(4)))
    rep.add("Lie(GL2) = Lie(T) + Lie(GL2)_R", [b.indices for b in adjoint_blocks(Z)] == [(0, 3), (1, 2)])
    S = adjoint_sl2(Z)
    rep.add("sl2 is a subcomodule and both sl2 constructions agree", adjoint_sl2_from_gl2(Z).same_matrix(S))
    rep.add("sl2 adjoint is a comodule", verify_comodule(S).ok)
    rep.add("SL2 weights are [2, 0, -2]", sl2_adjoint_weights(Z) == [2, 0, -2])
    rep.add("Lie(SL2) = Lie(T) + Lie(SL2)_R", [b.indices for b in sl2_adjoint_blocks(Z)] == [(0, 2), (1,)])
    return rep


def c7_sym_vs_symtensor() -> Report:
    rep = Report("Sym^2(V) against sym_2(V)")
    a, b = sym_pair(Z, "N")
    r = iso_exists(a, b)
    ident = [[int(i == j) for j in range(3)] for i in range(3)]
    rep.add("over k[N]: isomorphic with witness Id", r.isomorphic and r.witness == ident and a.same_matrix(b),
            str(r.witness))
    a, b = sym_pair(Q, "G")
    r = iso_exists(b, a)  # U sym_2 = Sym^2 U
    U = [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
    rep.add("over Q, k[GL2]: witness diag(1, 2, 1)", r.isomorphic and r.witness == U and is_morphism(U, b, a),
            str(r.witness))
    H = hom_space(a, b)
    rep.add("over Q, k[GL2]: hom(Sym^2, sym_2) is spanned by diag(1, 1/2, 1)",
            H.dim == 1 and is_morphism(H.basis[0], a, b) and all(
                H.basis[0][i][j] * 2 == [[2, 0, 0], [0, 1, 0], [0, 0, 2]][i][j] for i in range(3) for j in range(3)))
    a, b = sym_pair(Z, "G")
    r1, r2 = iso_exists(a, b), iso_exists(b, a)
    rep.add("over Z, k[GL2]: no isomorphism", r1.verdict == "none" and r2.verdict == "none", r1.obstruction)
    rep.add("obstruction is a unit condition", "unit" in r1.obstruction and "unit" in r2.obstruction)
    rep.merge(dual_iso_check(), "duals")
    a, b = sym_pair(Q, "G", duals=True)
    rep.add("duals over Q, k[GL2]: isomorphic", iso_exists(a, b).isomorphic)
    return rep


def c8_quotient(bound: int = 4) -> Report:
    rep = Report(f"k[N/T] inside k[N], window {bound}")
    for group in ("GL2", "SL2"):
        rep.merge(invariant_subalgebra_check(group, bound, Z), "")
        rep.merge(free_basis_check(group, bound, Z), "")
        rep.merge(verify_hopf_axioms(build_hopf(group, "NmodT", Z)), f"{group} k[N/T]")
        rep.merge(weyl_inclusion(group, Z).verify(), f"{group} k[N/T] -> k[N]")
        for s, t in (("G", "N"), ("N", "T"), ("G", "T")):
            rep.merge(quotient_map(group, s, t, Z).verify(), f"{group} {s}->{t}")
    rep.merge(weyl_constant_scheme_check(Z), "")
    return rep


def c9_points() -> Report:
    rep = Report("points over finite rings")
    rep.merge(order_check((2, 3, 5)), "")
    for q in (2, 3, 5):
        for ambient in ("GL2", "SL2"):
            for kind in ("G", "N", "T", "NmodT"):
                rep.merge(hopf_points_consistency(ambient, q, kind), f"{ambient} {kind} F{q}")
            rep.merge(normalizer_check(q, ambient), f"{ambient} F{q}")
        rep.merge(root_coroot_check(q), f"F{q}")
    for n in range(2, 8):
        rep.merge(splitting_check(n), f"Z/{n}")
    return rep


def c10_finite_field() -> Report:
    rep = Report("Sym^2(V) over F2")
    F2 = CoeffRing.prime_field(2)
    W, WN, WT = _sym_over_n(2, F2)
    rep.add("span{e1^2, e2^2} is a k[GL2]-subcomodule", is_closed(W, (0, 2)))
    sub = sub_comodule(W, (0, 2))
    rep.add("it satisfies the comodule axioms", verify_comodule(sub).ok)
    blocks = refined_decompose(WN, extract_weights(WT))
    rep.add("it equals the first refined block", blocks[0].indices == (0, 2))
    rep.add("no such subcomodule over Z", not is_closed(_sym_over_n(2, Z)[0], (0, 2)))
    return rep


@dataclass
class Criterion:
    number: int
    title: str
    limit: float  # seconds
    run: Callable[[], Report]


CRITERIA = [
    Criterion(1, "Hopf axioms", 1.0, c1_hopf_axioms),
    Criterion(2, "refined Weyl character formula", 5.0, c2_refined_characters),
    Criterion(3, "refined decomposition closure", 5.0, c3_block_closure),
    Criterion(4, "irreducibility of blocks", 10.0, c4_irreducibility),
    Criterion(5, "Dist_1 bracket table", 1.0, c5_distributions),
    Criterion(6, "adjoint equality and weights", 2.0, c6_adjoint),
    Criterion(7, "Sym^2 versus sym_2", 2.0, c7_sym_vs_symtensor),
    Criterion(8, "quotient construction", 2.0, c8_quotient),
    Criterion(9, "points oracle", 10.0, c9_points),
    Criterion(10, "finite field example", 1.0, c10_finite_field),
]


@dataclass
class Outcome:
    criterion: Criterion
    report: Report
    seconds: float

    @property
    def in_time(self) -> bool:
        return self.seconds < self.criterion.limit

    @property
    def passed(self) -> bool:
        return self.report.ok and self.in_time

    def line(self) -> str:
        c = self.criterion
        status = "PASS" if self.passed else "FAIL"
        why = "" if self.report.ok else f"; failing: {', '.join(x.name for x in self.report.failures()[:3])}"
        return f"[{status}] {c.number:2d}. {c.title}: {self.seconds:.2f}s (limit {c.limit:g}s){why}"


def run_criterion(c: Criterion, **kwargs) -> Outcome:
    t0 = time.perf_counter()
    rep = c.run(**kwargs)
    return Outcome(c, rep, time.perf_counter() - t0)


def run_all(dmax: int = 8) -> list[Outcome]:
    out = []
    for c in CRITERIA:
        kwargs = {"dmax": dmax} if c.number == 4 else {}
        out.append(run_criterion(c, **kwargs))
    return out
