//! Persisting subobject counts and reusing them: the second algebra computes nothing.

use quiver_hall::gfq::Prime;
use quiver_hall::hall::HallAlgebra;
use quiver_hall::quiver::Quiver;
use quiver_hall::verify::{run_suite, Suite};

fn main() -> quiver_hall::Result<()> {
    let path = std::env::temp_dir().join("quiver_hall_a3_q2.json");

    let cold = HallAlgebra::new(Quiver::builtin("a3")?, Prime::new(2)?, 3)?;
    run_suite(&cold, Suite::Green)?;
    std::fs::write(&path, cold.table_json()?)?;
    println!(
        "cold: computed {} profiles, wrote {}",
        cold.table().computed_count(),
        path.display()
    );

    let warm = HallAlgebra::new(Quiver::builtin("a3")?, Prime::new(2)?, 3)?;
    let loaded = warm.load_table_json(&std::fs::read_to_string(&path)?)?;
    run_suite(&warm, Suite::Green)?;
    println!(
        "warm: loaded {loaded} profiles, computed {}",
        warm.table().computed_count()
    );
    assert_eq!(warm.table_json()?, cold.table_json()?);

    let other_q = HallAlgebra::new(Quiver::builtin("a3")?, Prime::new(3)?, 3)?;
    match other_q.load_table_json(&std::fs::read_to_string(&path)?) {
        Err(e) => println!("q=3 refuses the file: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
