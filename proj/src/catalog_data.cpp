#include "lgt/potentials.hpp"

namespace lgt {

// Records are applied top to bottom; "base = @id" pulls in an earlier record's
// finished potential. Labels list x1, x2, ... in the order used for the pencil.
const std::string& builtin_catalog_text() {
  static const std::string text = R"CAT(
[P2]
delta = P3
description = projective plane
params = 1
labels = (1,0) (0,1) (-1,-1)
base = x + y + e^{-a0}/(x*y)

[P1xP1]
alias = P4a
delta = P4a
description = product of two lines, H = (a, b) with a -> a0, b -> a1
params = 2
labels = (0,1) (1,0) (0,-1) (-1,0)
base = y + x + e^{-a1}/y + e^{-a0}/x

[F1]
alias = P4b
delta = P4b
description = plane blown up in one point
params = 2
labels = (1,0) (0,-1) (-1,1) (0,1)
base = x + 1/y + e^{-a0}*y/x + e^{-a0-a1}*y

[Q-cone]
alias = P4c
delta = P4c
description = quadric cone degeneration of the product of two lines, a -> a0, b -> a1
params = 2
labels = (0,1) (1,-1) (0,-1) (-1,-1)
base = y + e^{-a0}/(x*y) + (e^{-a0} + e^{-a1})/y + e^{-a1}*x/y

[S7]
alias = P5a
delta = P5a
description = degree 7 del Pezzo, trivial degeneration
params = 3
labels = (1,0) (1,1) (0,1) (0,-1) (-1,-1)
base = x + y + e^{-a0}/(x*y) + e^{-a0-a1}/y + e^{-a2}*x*y

[S7-P5b]
alias = P5b
delta = P5b
description = degree 7 del Pezzo, nontrivial Gorenstein degeneration
params = 3
labels = (0,1) (1,0) (1,-1) (0,-1) (-1,-1)
base = x + y + e^{-a0}/(x*y) + e^{-a0-a1}/y + e^{-a0-a1-a2}*x/y
correct = (1,-1) (0,-1) (-1,-1)

[S6]
alias = P6a
delta = P6a
description = degree 6 del Pezzo
params = 4
labels = (1,0) (1,1) (0,1) (-1,0) (-1,-1) (0,-1)
base = @S7
extend = (-1,0) : e^{-a0-a3}

[S6-P6b]
alias = P6b
delta = P6b
description = degree 6 del Pezzo degenerating to the P6b surface
params = 4
labels = (0,1) (1,0) (1,-1) (0,-1) (-1,-1) (1,1)
base = x + y + e^{-a0}/(x*y) + e^{-a0-a1}/y + e^{-a0-a1-a2}*x/y
extend = (1,1) : e^{-a3}
correct = (1,1) (1,0) (1,-1)
correct = (1,-1) (0,-1) (-1,-1)

[S5-P7a]
alias = P7a
delta = P7a
description = degree 5 del Pezzo degenerating to the P7a surface
params = 5
labels = (0,1) (1,0) (1,-1) (0,-1) (-1,-1) (1,1) (-1,0)
base = x + y + e^{-a0}/(x*y) + e^{-a0-a1}/y + e^{-a0-a1-a2}*x/y
extend = (1,1) : e^{-a3}
extend = (-1,0) : e^{-a0-a4}
correct = (1,1) (1,0) (1,-1)
correct = (1,-1) (0,-1) (-1,-1)

[S4]
alias = P8b
delta = P8b
description = degree 4 del Pezzo degenerating to the P8b surface
params = 6
labels = (0,1) (1,1) (1,0) (0,-1) (-1,-1) (-1,0) (1,-1) (-2,-1)
base = @S6
extend = (1,-1) : e^{-a0-a1-a4}
extend = (-2,-1) : e^{-2a0-a3-a5}
correct = (1,-1) (0,-1) (-1,-1) (-2,-1)
correct = (1,1) (1,0) (1,-1)
correct = (-2,-1) (-1,0) (0,1)

[S4-P8a]
alias = P8a
delta = P8a
description = degree 4 del Pezzo degenerating to the P8a surface
params = 6
labels = (0,1) (1,1) (1,0) (0,-1) (-1,-1) (-1,0) (-1,1) (1,-1)
base = @S6
extend = (-1,1) : e^{-a0-a3-a4}
extend = (1,-1) : e^{-a0-a1-a5}
correct = (-1,1) (0,1) (1,1)
correct = (1,1) (1,0) (1,-1)
correct = (1,-1) (0,-1) (-1,-1)
correct = (-1,-1) (-1,0) (-1,1)

[S3]
alias = P9
delta = P9
description = cubic surface degenerating to the P9 surface
params = 7
labels = (0,1) (1,1) (1,0) (0,-1) (-1,-1) (-1,0) (1,2) (1,-1) (-2,-1)
base = @S6
extend = (1,2) : e^{-a2-a4}
extend = (1,-1) : e^{-a0-a1-a5}
extend = (-2,-1) : e^{-2a0-a3-a6}
correct = (1,-1) (0,-1) (-1,-1) (-2,-1)
correct = (1,2) (1,1) (1,0) (1,-1)
correct = (-2,-1) (-1,0) (0,1) (1,2)

[V4]
description = quartic threefold
ks = 4311
base = (x + y + z + 1)^4/(x*y*z)

[V6]
description = complete intersection of a quadric and a cubic
ks = 4286
base = (x + 1)^2*(y + z + 1)^3/(x*y*z)

[V8-cube]
description = intersection of three quadrics
ks = 4250
base = (x + 1)^2*(y + 1)^2*(z + 1)^2/(x*y*z)

[V8-alt]
description = intersection of three quadrics, second degeneration
ks = 4166
base = x*z^2 + 3*y*z^2 + 3*x^-1*y^2*z^2 + x^-2*y^3*z^2 + 2*x*z + 4*y*z + 2*x^-1*y^2*z + x + y + x*y^-1*z + 3*z + 3*x^-1*y*z + x^-2*y^2*z + 4*x*y^-1 + 4*x^-1*y + 3*x*y^-1*z^-1 + 3*z^-1 + 2*x*y^-2*z^-1 + 4*y^-1*z^-1 + 2*x^-1*z^-1 + 3*x*y^-2*z^-2 + 3*y^-1*z^-2 + x*y^-3*z^-3 + y^-2*z^-3

[D22]
description = divisor of bidegree (2,2) in a product of two planes
ks = 3874
base = x + y + z + 2*x^-1*y*z + x^-2*y^2*z + x^-2*y*z^2 + x^-3*y^2*z^2 + 2*x^2*y^-1*z^-1 + 2*x*z^-1 + 2*x*y^-1 + 2*x^-1*y + 2*x^-1*z + 2*x^-2*y*z + x^3*y^-2*z^-2 + x^2*y^-1*z^-2 + x^2*y^-2*z^-1 + 2*x*y^-1*z^-1 + z^-1 + y^-1 + x^-1

[C222]
description = double cover of a product of three lines branched in a (2,2,2) divisor
ks = 3874
base = x + y + z + 3*x^-1*y*z + x^-2*y^2*z + x^-2*y*z^2 + x^-3*y^2*z^2 + 2*x^2*y^-1*z^-1 + 2*x*z^-1 + 2*x*y^-1 + 2*x^-1*y + 2*x^-1*z + 2*x^-2*y*z + x^3*y^-2*z^-2 + x^2*y^-1*z^-2 + x^2*y^-2*z^-1 + 3*x*y^-1*z^-1 + z^-1 + y^-1 + x^-1

[V12]
description = linear section of the orthogonal Grassmannian
ks = 3874
base = x + y + z + 2*x^-1*y*z + x^-2*y^2*z + x^-2*y*z^2 + x^-3*y^2*z^2 + 2*x^2*y^-1*z^-1 + 2*x*z^-1 + 2*x*y^-1 + 2*x^-1*y + 2*x^-1*z + 2*x^-2*y*z + x^3*y^-2*z^-2 + x^2*y^-1*z^-2 + x^2*y^-2*z^-1 + 3*x*y^-1*z^-1 + z^-1 + y^-1 + x^-1

[V10]
description = Gushel-Mukai threefold
ks = 4073
base = x*z^2 + 2*x*z + y*z + x*y^-1*z^2 + x + y + 3*x*y^-1*z + 3*z + 3*x*y^-1 + 2*x^-1*y + y^-1*z + x*y^-1*z^-1 + 3*z^-1 + 2*x^-1*y*z^-1 + 3*y^-1 + 2*x^-1 + 3*y^-1*z^-1 + 4*x^-1*z^-1 + x^-2*y*z^-1 + y^-1*z^-2 + 2*x^-1*z^-2 + x^-2*y*z^-2

[D1111]
description = divisor of degree (1,1,1,1) in a product of four lines
ks = 1529
labels = (1,0,0) (0,1,0) (0,0,1) (-1,1,1) (1,0,-1) (1,-1,0) (-1,1,0) (-1,0,1) (1,-1,-1) (0,0,-1) (0,-1,0) (-1,0,0)
base = x + y + z + x^-1*y*z + x*z^-1 + x*y^-1 + x^-1*y + x^-1*z + x*y^-1*z^-1 + z^-1 + y^-1 + x^-1
)CAT";
  return text;
}

}  // namespace lgt
