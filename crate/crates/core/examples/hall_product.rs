//! Hall products in the A_2 Hall algebra: the simples do not commute, and squares pick up
//! q-binomial coefficients.

use quiver_hall::gfq::Prime;
use quiver_hall::hall::HallAlgebra;
use quiver_hall::quiver::Quiver;

fn main() -> quiver_hall::Result<()> {
    for q in [2, 3] {
        let h = HallAlgebra::new(Quiver::builtin("a2")?, Prime::new(q)?, 3)?;
        let s1 = h.basis_by_label("(1,0)")?;
        let s2 = h.basis_by_label("(0,1)")?;
        println!("q = {q}");
        for (name, v) in [
            ("S1·S2", h.multiply(&s1, &s2)?),
            ("S2·S1", h.multiply(&s2, &s1)?),
            ("S1·S1", h.multiply(&s1, &s1)?),
            ("S1·S1·S1", h.multiply(&h.multiply(&s1, &s1)?, &s1)?),
        ] {
            let terms: Vec<String> = h
                .render(&v)
                .into_iter()
                .map(|(k, c)| format!("{c}[{k}]"))
                .collect();
            println!("  {name:<9} = {}", terms.join(" + "));
        }
    }
    Ok(())
}
