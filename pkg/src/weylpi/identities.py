"""Linear-algebra layer: bases of the weak-identity spaces per multidegree,
dimension of the known-identity ideal, and conjecture verification.

Verification has two independent routes.  The primary shortcut: if the
generic evaluations of the completely reduced bracket-monomials of
multidegree delta are linearly independent, then every weak identity of
that multidegree rewrites to 0 modulo the ideal (its beta vanishes by
evaluation at equal arguments, and the alpha_i vanish by independence),
so the identity space and the ideal coincide there.  The fallback
compares dim Id_delta against the rank of an explicit spanning set of the
ideal slice.
"""

import math
import time
from dataclasses import dataclass
from itertools import product

from .bracket import enumerate_completely_reduced
from .errors import ResourceLimit
from .evaluation import generic_substitution, substitute_tuple
from .fields import Field
from .free_algebra import NCPoly, _multiset_permutations, gamma, generator_at, st3, t4
from .linalg import row_reduce_sparse, rref_vectors
from .parser import format_poly

DEFAULT_MAX_DEGREE = 8


def words_of_multidegree(delta):
    """All words with the given letter multiset, in lexicographic order."""
    letters = [i + 1 for i, d in enumerate(delta) for _ in range(d)]
    return list(_multiset_permutations(letters))


def space_dimension(delta):
    """dim of the multidegree slice of the free algebra (a multinomial)."""
    n = math.factorial(sum(delta))
    for d in delta:
        n //= math.factorial(d)
    return n


def eval_vector(f):
    """Sparse coordinates of generic_substitution(f): (i, j, exps) -> scalar."""
    w = generic_substitution(f)
    out = {}
    for (i, j), c in w.terms.items():
        for exps, scalar in c.terms.items():
            out[(i, j, exps)] = scalar
    return out


def identity_basis(delta, fieldobj):
    """Deterministic echelon basis of the weak identities of multidegree delta.

    The kernel of the word-basis -> Weyl-evaluation map, with basis vectors
    brought to reduced echelon form over the lexicographic word order.
    """
    delta = tuple(delta)
    words = words_of_multidegree(delta)
    if not words:
        return []
    nvars = len(delta)
    rows = [
        eval_vector(NCPoly.monomial(w, fieldobj, nvars=nvars)) for w in words
    ]
    _, kernel = row_reduce_sparse(rows, fieldobj, want_kernel=True)
    dense = []
    for vec in kernel:
        dense.append([vec.get(i, fieldobj.zero) for i in range(len(words))])
    basis = []
    for row in rref_vectors(dense, len(words), fieldobj):
        terms = {words[i]: c for i, c in enumerate(row)}
        basis.append(NCPoly(fieldobj, nvars, terms))
    return basis


def _ideal_span_rows(delta, fieldobj):
    delta = tuple(delta)
    m = len(delta)
    generators = [(gamma(3, fieldobj), 3), (st3(fieldobj), 3), (t4(fieldobj), 4)]
    seen = set()
    rows = []
    for g, arity in generators:
        for idxs in product(range(1, m + 1), repeat=arity):
            sub = generator_at(g, idxs)
            if sub.is_zero():
                continue
            sub = NCPoly(fieldobj, m, sub.terms)
            mu = sub.mdeg()
            if any(mu[i] > delta[i] for i in range(m)):
                continue
            rem = [i + 1 for i in range(m) for _ in range(delta[i] - mu[i])]
            for u in _multiset_permutations(rem):
                for cut in range(len(u) + 1):
                    w1 = NCPoly.monomial(u[:cut], fieldobj, nvars=m)
                    w2 = NCPoly.monomial(u[cut:], fieldobj, nvars=m)
                    row = (w1 * sub * w2).terms
                    key = frozenset(row.items())
                    if key in seen:
                        continue
                    seen.add(key)
                    rows.append(row)
    return rows


def ideal_span_dimension(delta, fieldobj):
    """dim of the multidegree slice of the ideal of known identities,
    as the rank of the explicit spanning set over the word basis."""
    rank, _ = row_reduce_sparse(_ideal_span_rows(delta, fieldobj), fieldobj)
    return rank


@dataclass
class ConjectureReport:
    mdeg: tuple
    field: Field
    n_reduced: int
    eval_rank: int
    dim_id: int
    dim_I: object  # int or None
    verdict: str  # Verified | Refuted | Inconclusive
    witness: object = None  # expression text or None
    elapsed_ms: float = 0.0

    def to_dict(self):
        return {
            "mdeg": list(self.mdeg),
            "field": "q" if self.field.p == 0 else f"fp:{self.field.p}",
            "n_reduced": self.n_reduced,
            "eval_rank": self.eval_rank,
            "dim_id": self.dim_id,
            "dim_I": self.dim_I,
            "verdict": self.verdict,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        }


def verify_conjecture(delta, fieldobj=None, max_degree=None):
    """Check that the weak identities of multidegree delta all lie in the
    ideal of known identities; never extrapolated across characteristics."""
    from .rewriter import normal_form

    t0 = time.perf_counter()
    delta = tuple(delta)
    fieldobj = fieldobj or Field.rationals()
    cap = max_degree if max_degree is not None else DEFAULT_MAX_DEGREE
    if sum(delta) > cap:
        raise ResourceLimit(f"total degree {sum(delta)} exceeds cap {cap}")

    reduced = enumerate_completely_reduced(delta)
    n = len(reduced)
    rows = [eval_vector(b.expand(fieldobj)) for b in reduced]
    eval_rank, kernel = row_reduce_sparse(rows, fieldobj, want_kernel=True)

    # dim Id = dim F_delta - rank of the evaluated quotient spanning set
    # {x1^d1...xm^dm} + reduced monomials (sound by the normal-form theorem)
    nvars = len(delta)
    pure = tuple(l for l, d in enumerate(delta, start=1) for _ in range(d))
    pure_row = eval_vector(NCPoly.monomial(pure, fieldobj, nvars=nvars))
    rank_full, _ = row_reduce_sparse(rows + [pure_row], fieldobj)
    dim_id = space_dimension(delta) - rank_full

    if eval_rank == n:
        report = ConjectureReport(delta, fieldobj, n, eval_rank, dim_id, dim_id, "Verified")
    else:
        span_rows = _ideal_span_rows(delta, fieldobj)
        dim_I, _ = row_reduce_sparse(span_rows, fieldobj)
        if dim_I == dim_id:
            report = ConjectureReport(delta, fieldobj, n, eval_rank, dim_id, dim_I, "Verified")
        else:
            witness = None
            for vec in kernel:
                g = NCPoly.zero(fieldobj, nvars)
                for idx, c in vec.items():
                    g = g + reduced[idx].expand(fieldobj).scale(c)
                if g.is_zero():
                    continue
                rank_aug, _ = row_reduce_sparse(span_rows + [g.terms], fieldobj)
                nf = next(iter(normal_form(g).values()), None)
                if rank_aug > dim_I and nf is not None and not nf.is_zero():
                    witness = format_poly(g)
                    break
            verdict = "Refuted" if witness is not None else "Inconclusive"
            report = ConjectureReport(
                delta, fieldobj, n, eval_rank, dim_id, dim_I, verdict, witness
            )
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report


def two_variable_certificate(r, s, fieldobj=None):
    """Evaluation table certifying independence in the two-variable case.

    For i = 1..s the monomial x1^{r-i} x2^{s-i} [x1,x2]^i evaluates at
    (x, y) to (-1)^i x^{r-i} y^{s-i}, which are distinct basis elements.
    Returns a list of (i, monomial NCPoly, evaluated WeylElement).
    """
    if not r >= s >= 1:
        raise ValueError("need r >= s >= 1")
    fieldobj = fieldobj or Field.rationals()
    x1 = NCPoly.variable(1, fieldobj, nvars=2)
    x2 = NCPoly.variable(2, fieldobj, nvars=2)
    br = x1 * x2 - x2 * x1
    table = []
    for i in range(1, s + 1):
        mono = (x1 ** (r - i)) * (x2 ** (s - i)) * (br ** i)
        table.append((i, mono, substitute_tuple(mono, ("x", "y"))))
    return table


def degree_multidegrees(n):
    """Sorted-descending multidegree representatives of total degree n
    (one per variable-permutation class): the partitions of n."""
    def rec(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest

    return list(rec(n, n))
