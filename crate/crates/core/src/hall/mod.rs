//! The Hall algebra of `Rep(Q)` as an algebra and coalgebra in `K`-graded vector spaces.

mod algebra;
mod grade;
mod table;
mod vector;

pub use algebra::{rat, Braiding, HallAlgebra};
pub use grade::{q_power, EulerForm, Grade};
pub use table::{HallTable, Profile, TableHeader, TABLE_FORMAT_VERSION};
pub use vector::{GradedVector, InstanceId, Tensor};
