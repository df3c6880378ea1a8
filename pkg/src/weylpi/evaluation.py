"""Substitution of span{x, y} elements into free-algebra polynomials and
the weak-identity membership test.

The generic substitution sends x_k to a_k*x + b_k*y with fresh formal
parameters, which is exact over an infinite field of the configured
characteristic: the parameter-monomial coefficients of the result are
precisely the evaluations of all partial linearizations at tuples from
{x, y}.
"""

from .errors import ArityMismatch
from .weyl import CommPoly, WeylElement


def letter_image(k, field):
    """The generic image a_k*x + b_k*y of the k-th variable."""
    a = CommPoly.parameter(field, 2 * (k - 1))
    b = CommPoly.parameter(field, 2 * (k - 1) + 1)
    return WeylElement(field, {(1, 0): a, (0, 1): b})


def generic_substitution(f):
    """Evaluate f at x_k -> a_k*x + b_k*y with formal parameters."""
    F = f.field
    images = {}
    out = WeylElement.zero(F)
    for word, coeff in f.terms.items():
        acc = WeylElement.one(F)
        for letter in word:
            img = images.get(letter)
            if img is None:
                img = images[letter] = letter_image(letter, F)
            acc = acc * img
        out = out + acc.scale(coeff)
    return out


def substitute_tuple(f, t):
    """Evaluate f at a concrete tuple over {x, y} ('x'/'y' per variable)."""
    F = f.field
    if len(t) != f.nvars:
        raise ArityMismatch(f"tuple length {len(t)} != nvars {f.nvars}")
    images = {}
    for k, choice in enumerate(t, start=1):
        if choice == "x":
            images[k] = WeylElement.x(F)
        elif choice == "y":
            images[k] = WeylElement.y(F)
        else:
            raise ValueError(f"tuple entries must be 'x' or 'y', got {choice!r}")
    out = WeylElement.zero(F)
    for word, coeff in f.terms.items():
        acc = WeylElement.one(F)
        for letter in word:
            acc = acc * images[letter]
        out = out + acc.scale(coeff)
    return out


def _used_variables(f):
    return sorted({l for w in f.terms for l in w})


def is_weak_identity(f, multilinear_fast_path=True):
    """True iff every multihomogeneous component of f vanishes under all
    substitutions from span{x, y}."""
    for comp in f.multihomogeneous_components().values():
        delta = comp.mdeg()
        multilinear = all(d <= 1 for d in delta)
        if multilinear and multilinear_fast_path:
            used = _used_variables(comp)
            # compact to the used variables and enumerate all 2^m tuples
            g = comp.rename({v: t + 1 for t, v in enumerate(used)})
            g = type(comp)(g.field, len(used), g.terms)
            m = len(used)
            for mask in range(2 ** m):
                t = tuple("xy"[(mask >> k) & 1] for k in range(m))
                if not substitute_tuple(g, t).is_zero():
                    return False
        else:
            if not generic_substitution(comp).is_zero():
                return False
    return True
