"""Independent sympy computations whose outputs are frozen into the C++ tests."""
from sympy import symbols, expand, Matrix, groebner, reduced, Poly

x1, x2, x3, x4, x5 = X = symbols("x1:6")

print("product:", expand((x1 + x2 + x4) * (x2 + x3 + x5)))
print("product terms:", len(Poly(expand((x1 + x2 + x4) * (x2 + x3 + x5)), *X).terms()))

f = x1**2 - x2 * x3
H = Matrix(3, 3, lambda i, j: f.diff(X[i]).diff(X[j]))
print("hessian:", H.tolist(), "rank", H.rank())

h = expand((1 + x1) * (x2 + x3) - (x2 + x3))
print("initial form source:", h)

G = groebner([x1**2 - x2**2, x1 * x2], x1, x2, order="grevlex")
print("gb {x1^2-x2^2, x1x2}:", list(G.exprs))

c = [x1**2 - x2 * x3, x2**2 - x3 * x5, x3**2 - x1 * x4, x4**2, x5**2, x3 * x4, x2 * x5, x4 * x5]
Gc = groebner(c, *X, order="grevlex")
print("gb c:", list(Gc.exprs))
delta = expand((x1 - x2) * (x2 - x3 - x4) - x4 * (-x3 + x4 + 2 * x5))
print("delta expanded:", delta)
print("delta NF:", reduced(delta, list(Gc.exprs), *X, order="grevlex")[1])
print("x2^2 NF:", reduced(x2**2, list(Gc.exprs), *X, order="grevlex")[1])

a, b, cc, d, e, f_, g = symbols("a b c d e f g")
exprs = [a*cc + b*d + a*e + b*e, a*d + b*d + b*e + b*g, a*cc + b*e + a*f_, a*cc + b*cc + a*d,
         b*cc + a*e, b*cc + a*g, a*d + a*f_ + b*f_]
vals = {a: 1, b: 1, cc: 0, d: 1, e: 1, f_: 0, g: 1}
print("7-gen at (1,1,0,1,1,0,1):", [ex.subs(vals) for ex in exprs])
