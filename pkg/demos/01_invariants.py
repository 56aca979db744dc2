"""Basic invariants of a euclidean isometry, computed exactly.

Walks through the running examples of the library: a glide reflection, a
half turn, and a translation of the plane.  Everything is rational
arithmetic, so every printed value is exact.
"""

from scherk import (
    Isometry,
    Matrix,
    Vector,
    classify,
    min_set,
    move_set,
    reflection_length,
    standard_splitting,
    translation,
)

# A glide reflection of the plane: reflect across the x-axis, then slide
# one unit along it.  Its matrix negates y and the translation part is e1.
glide = Isometry(Matrix([[1, 0], [0, -1]]), Vector([1, 0]))

print("== glide reflection ==")
cls = classify(glide)
print("type:", cls.tag)
print("reflection length:", cls.length)

# The move-set collects every motion vector w(x) - x.  For the glide it is
# the vertical line through (1, 0): the horizontal slide is unavoidable,
# the vertical component depends on the starting point.
mov = move_set(glide)
def fmt(vector):
    return "(" + ", ".join(str(c) for c in vector) + ")"


print("move-set direction basis:", [fmt(b) for b in mov.direction.basis])
print("move-set shift mu:", fmt(mov.mu))

# The min-set is where the motion is exactly mu: the glide axis.
mn = min_set(glide)
print("min-set point:", fmt(mn.point.coords))
print("min-set direction:", [fmt(b) for b in mn.direction.basis])

# The standard splitting peels the translation off: glide = t_mu u with u
# the pure reflection across the axis.
mu, u = standard_splitting(glide)
print("splitting translation:", fmt(mu))
print("elliptic part fixes the axis:", min_set(u) == mn)

print()
print("== half turn and translation ==")
half_turn = Isometry(Matrix([[-1, 0], [0, -1]]), Vector([0, 0]))
print("half turn:", classify(half_turn).tag, "length", reflection_length(half_turn))

shift = translation(Vector([2, 0]))
print("translation:", classify(shift).tag, "length", reflection_length(shift))

# Scherk's formula behind those numbers: dim Mov for elliptic isometries,
# dim Mov + 2 for hyperbolic ones.  The half turn moves every direction
# (dim 2, elliptic); the translation has a single motion vector (dim 0,
# hyperbolic), so two reflections are needed and suffice.
for w, name in [(glide, "glide"), (half_turn, "half turn"), (shift, "translation")]:
    cls = classify(w)
    base = cls.move_set.dim
    bonus = 0 if cls.is_elliptic else 2
    print(f"{name}: dim Mov = {base}, length = {base} + {bonus} = {cls.length}")
