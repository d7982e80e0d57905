//! Coproducts `Δ[E] = Σ c [sub] ⊗ [quotient]` and the counit.

use quiver_hall::gfq::Prime;
use quiver_hall::hall::HallAlgebra;
use quiver_hall::quiver::Quiver;

fn main() -> quiver_hall::Result<()> {
    let h = HallAlgebra::new(Quiver::builtin("a2")?, Prime::new(3)?, 3)?;
    for label in ["(1,1)", "(1,0)+(0,1)", "(1,0)+(1,0)", "(1,0)+(1,1)"] {
        let e = h.basis_by_label(label)?;
        println!("Δ[{label}]  (ε = {})", h.counit(&e));
        for (k, c) in h.render_tensor(&h.comultiply(&e)?) {
            println!("    {c:>6}  {k}");
        }
    }
    Ok(())
}
