"""Smoke test for the ordlab Python extension."""

import ordlab
from ordlab import Ordinal, Theory, Worm

e0 = Ordinal.epsilon_zero()
assert str(Ordinal("w^w+1")) == "w^w+1"
assert Ordinal("w^w+1") < e0
assert Ordinal(3) + Ordinal.omega() == Ordinal.omega()
assert str(e0 * 2) == "e0*2"
assert str(Ordinal(0).next_phi_value(1)) == "e0"
assert [str(t) for t in Ordinal.enumerate(2)] == ["0", "1", "2", "w", "e0"]

w = Worm("1 0 1")
assert str(w.ordinal()) == "w*2"
assert Worm([2, 1]).ordinal() == Ordinal("w^w")
assert str(Worm.of_ordinal("w^2+w")) == "1 0 1 1"
assert str(Worm([1]).theory()) == "(rfn 2 1 EA+)"

assert str(Theory("PA").pi_ordinal(1)) == "e0"
assert str(Theory("PA+Con(PA)").pi_ordinal(1)) == "e0*2"
assert str(Theory("(rfn 2 1 EA+)").reduce_to_level(1)) == "(rfn 1 w EA+)"
assert str(Theory("EA+").progression_stage("w")) == "(rfn 1 w EA+)"

assert str(ordlab.omega_model_dilator(0, 0)) == "e0"
assert ordlab.find_descending("x != 0", 5) == [0, 1, 2, 3, 4]
assert ordlab.find_descending("true", 1000) is None
report = ordlab.audit("x != 7", 100)
assert report["counterexamples"] == 1 and report["equivalent"]
assert not ordlab.check_ascending("x != 7", 100)

assert ordlab.slowcon("phi") == "∀x(F_e0(x)↓ → Con(ISigma_x + φ))"
assert ordlab.rosser_combination(ascii=True) == "phi \\/ (psi /\\ theta)"
assert ordlab.con_star_equation() == "Con★(α,T) ↔ ∀β ≺ α Con(T+⌜Con★(β,T)⌝)"

try:
    Ordinal("w^")
except ordlab.OrdlabError as e:
    assert "syntax" in str(e)
else:
    raise AssertionError("expected a parse error")

print("python smoke test passed")
