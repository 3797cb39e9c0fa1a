"""Dimension of the space of degree-d forms vanishing on the image of
(u1, u2) -> (1, 3u1, u2, 3u1^2 - u2, u1^3, 3u1^4 - 3u1^2 u2 + u2^2),
computed symbolically: substitute the parametrisation into every monomial and
take the kernel of the resulting coefficient matrix. Also checks that the
line spanned by e4 and e5 lies in the common zero set of that kernel."""
import itertools
import sympy as sp

u1, u2, m = sp.symbols("u1 u2 m")
param = [sp.Integer(1), 3 * u1, u2, 3 * u1**2 - u2, u1**3, 3 * u1**4 - 3 * u1**2 * u2 + u2**2]


def monomials(d):
    return sorted((e for e in itertools.product(range(d + 1), repeat=6) if sum(e) == d), reverse=True)


def kernel(d):
    mons = monomials(d)
    polys = [sp.Poly(sp.prod(p**k for p, k in zip(param, e)), u1, u2) for e in mons]
    keys = sorted({k for p in polys for k in p.as_dict()})
    mat = sp.Matrix([[p.as_dict().get(k, 0) for p in polys] for k in keys])
    return mons, mat.nullspace()


for d in (1, 2, 3):
    mons, ker = kernel(d)
    line = [0, 0, 0, 0, 1, m]
    vanish = all(
        sp.expand(sum(c * sp.prod(x**k for x, k in zip(line, e)) for c, e in zip(v, mons))) == 0 for v in ker
    )
    print(f"d={d} monomials={len(mons)} kernel_dim={len(ker)} pencil_line_vanishes={vanish}")
