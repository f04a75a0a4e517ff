"""Socle layers of the adjoint-type module V{(1);(1)} when two dimensions of
the natural module are split off in a type II embedding of gl(∞) into gl(∞).

The layers are compared with the finite restriction gl(n+2) ⊃ gl(n), which
only sees total multiplicities because finite restrictions are semisimple.
"""

from soclebranch import branching as br
from soclebranch import finite_models as fm
from soclebranch import verify


def ordered(counter):
    return {m: counter[m] for m in sorted(counter, key=br.SimpleModule.sort_key)}

module = br.gl((1,), (1,))
layers = br.layers_type_ii(module, 2)

print(f"module {module}, complement of dimension 2")
for r, layer in enumerate(layers):
    print(f"  layer {r}: " + ", ".join(f"{m} x{v}" for m, v in layer.items()))

print("totals       ", ordered(verify.totals(layers)))
print("gl(6) ⊃ gl(4)", ordered(fm.as_counter(fm.type_ii(module, 2, 4))))

print("\nwith an infinite complement the trivial part of the socle is infinite:")
for r, layer in enumerate(br.layers_type_ii(module, "inf")):
    print(f"  layer {r}: " + ", ".join(f"{m} x{v}" for m, v in layer.items()))
