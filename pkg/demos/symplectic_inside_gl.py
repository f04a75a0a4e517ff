"""sp(∞) sitting inside gl(∞) with V ≅ V_* ≅ V', then the same embedding
with one trivial vector added on top of V and of V_*.

The second case stacks a type I stage in front of the type III stage, so the
adjoint picks up extra layers containing the natural module and a trivial.
"""

from soclebranch import branching as br
from soclebranch import finite_models as fm
from soclebranch import verify


def ordered(counter):
    return {m: counter[m] for m in sorted(counter, key=br.SimpleModule.sort_key)}


def show(title, layers):
    print(title)
    for r, layer in enumerate(layers):
        print(f"  layer {r}: " + ", ".join(f"{m} x{v}" for m, v in layer.items()))


for m in verify.gl_modules(2):
    show(f"{m} restricted to sp(∞):", br.layers_type_iii(m, "GL", "SP", 1))

spec = br.EmbeddingSpec(ambient="GL", sub="SP", b=1, d=1)
module = br.gl((1,), (1,))
layers = br.layers_general(spec, module)
show(f"\n{module} with one trivial vector on top of V and V_*:", layers)
print("totals        ", ordered(verify.totals(layers)))
print("gl(9) ⊃ sp(8) ", ordered(fm.as_counter(fm.general_gl(module, "SP", 1, 0, 1, 8))))
