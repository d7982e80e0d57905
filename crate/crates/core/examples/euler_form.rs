//! The Euler form on dimension vectors against `dim Hom - dim Ext¹` of actual representations.

use quiver_hall::gfq::Prime;
use quiver_hall::hall::HallAlgebra;
use quiver_hall::quiver::Quiver;

fn main() -> quiver_hall::Result<()> {
    let h = HallAlgebra::new(Quiver::builtin("d4")?, Prime::new(2)?, 2)?;
    let reg = h.registry();
    println!("{}", reg.quiver().describe());
    let ind = reg.indecomposables();
    for &m in &ind {
        for &n in &ind {
            let (rm, rn) = (&reg.class(m).representative, &reg.class(n).representative);
            let (hom, ext) = (rm.hom_dim(rn)?, rm.ext1_dim(rn)?);
            let form = h.euler_form(&h.grade(m), &h.grade(n));
            assert_eq!(form, hom as i64 - ext as i64);
            if hom + ext > 0 {
                println!(
                    "<{}, {}> = {form:>2}   hom {hom}  ext {ext}",
                    h.label(m),
                    h.label(n)
                );
            }
        }
    }
    Ok(())
}
