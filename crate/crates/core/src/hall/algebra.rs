use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::grade::{q_power, EulerForm, Grade};
use super::table::{HallTable, Profile};
use super::vector::{GradedVector, InstanceId, Tensor};
use crate::classify::{ClassRef, ClassRegistry};
use crate::error::{Error, Result};
use crate::gfq::{enumerate_subspaces, Prime, Subspace};
use crate::quiver::Quiver;

static NEXT_INSTANCE: AtomicU64 = AtomicU64::new(1);

/// How `H ⊗ H` is made into an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Braiding {
    /// `v ⊗ w -> q^{-<n,m>} w ⊗ v` for `v` of grade `n` and `w` of grade `m`.
    #[default]
    Euler,
    /// The plain swap of ungraded vector spaces. Only useful as a negative control.
    Trivial,
}

/// The Hall algebra of a Dynkin quiver over `F_q`, restricted to classes of total dimension at
/// most the registry bound.
///
/// Basis elements are isomorphism classes. With `g^E_{MN}` the number of subrepresentations
/// `U ⊆ E` with `U ≅ N` and `E/U ≅ M`:
///
/// * `[M]·[N] = Σ_E g^E_{MN} [E]`
/// * `Δ[E] = Σ_{M,N} g^E_{MN} a_M a_N / a_E · [N] ⊗ [M]`
///
/// where `a_X = |Aut X|`. The number of exact-sequence pairs is `P^E_{MN} = g^E_{MN} a_M a_N`.
pub struct HallAlgebra {
    registry: Arc<ClassRegistry>,
    table: HallTable,
    euler: EulerForm,
    braiding: Braiding,
    instance: InstanceId,
    products: RwLock<HashMap<(ClassRef, ClassRef), Arc<GradedVector>>>,
}

impl std::fmt::Debug for HallAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HallAlgebra")
            .field("registry", &self.registry)
            .field("braiding", &self.braiding)
            .finish()
    }
}

impl HallAlgebra {
    pub fn new(quiver: Quiver, p: Prime, bound: usize) -> Result<Self> {
        let registry = ClassRegistry::build(Arc::new(quiver), p, bound)?;
        Ok(Self::from_registry(Arc::new(registry)))
    }

    pub fn from_registry(registry: Arc<ClassRegistry>) -> Self {
        let euler = EulerForm::new(registry.quiver().clone());
        HallAlgebra {
            registry,
            table: HallTable::new(),
            euler,
            braiding: Braiding::Euler,
            instance: InstanceId(NEXT_INSTANCE.fetch_add(1, Ordering::Relaxed)),
            products: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_braiding(mut self, braiding: Braiding) -> Self {
        self.braiding = braiding;
        self
    }

    pub fn braiding(&self) -> Braiding {
        self.braiding
    }

    pub fn registry(&self) -> &Arc<ClassRegistry> {
        &self.registry
    }

    pub fn table(&self) -> &HallTable {
        &self.table
    }

    pub fn q(&self) -> u32 {
        self.registry.prime().get()
    }

    pub fn euler(&self) -> &EulerForm {
        &self.euler
    }

    pub fn grade(&self, c: ClassRef) -> Grade {
        Grade::from(&self.registry.class(c).dims)
    }

    pub fn euler_form(&self, m: &Grade, n: &Grade) -> i64 {
        self.euler.eval(m, n)
    }

    pub fn aut(&self, c: ClassRef) -> BigInt {
        BigInt::from(self.registry.class(c).aut_order)
    }

    pub fn zero(&self) -> GradedVector {
        GradedVector::tagged(self.instance)
    }

    pub fn zero_tensor(&self) -> Tensor {
        Tensor::tagged(self.instance)
    }

    pub fn basis(&self, c: ClassRef) -> GradedVector {
        assert!(
            self.registry.contains(c),
            "class {c:?} outside the registry"
        );
        let mut v = self.zero();
        v.add_term(c, BigRational::one());
        v
    }

    pub fn basis_by_label(&self, label: &str) -> Result<GradedVector> {
        Ok(self.basis(self.registry.by_label(label)?))
    }

    /// The unit `[0]`.
    pub fn unit(&self) -> GradedVector {
        self.basis(self.registry.zero())
    }

    fn check_vector(&self, v: &GradedVector) -> Result<()> {
        if v.instance.is_some_and(|i| i != self.instance) {
            return Err(Error::InstanceMismatch);
        }
        if let Some((c, _)) = v.terms().find(|(c, _)| !self.registry.contains(*c)) {
            return Err(Error::UnknownClass(format!("#{}", c.0)));
        }
        Ok(())
    }

    fn check_tensor(&self, t: &Tensor) -> Result<()> {
        if t.instance.is_some_and(|i| i != self.instance) {
            return Err(Error::InstanceMismatch);
        }
        Ok(())
    }

    /// Subobject counts of `E`, computing and memoizing them on first use.
    pub fn profile(&self, e: ClassRef) -> Result<Arc<Profile>> {
        if let Some(p) = self.table.get(e) {
            return Ok(p);
        }
        let profile = self.compute_profile(e)?;
        Ok(self.table.insert_computed(e, profile))
    }

    /// Enumerates every per-vertex subspace tuple of the representative of `E`.
    fn compute_profile(&self, e: ClassRef) -> Result<Profile> {
        let reg = &self.registry;
        let rep = &reg.class(e).representative;
        let p = reg.prime();
        let mut profile = Profile::new();
        for n in rep.dims().sub_vectors() {
            let choices: Vec<Vec<Subspace>> = rep
                .dims()
                .0
                .iter()
                .zip(&n.0)
                .map(|(&amb, &k)| enumerate_subspaces(amb, k, p).map(Iterator::collect))
                .collect::<Result<_>>()?;
            let mut idx = vec![0usize; choices.len()];
            let mut tuple: Vec<Subspace> = choices.iter().map(|c| c[0].clone()).collect();
            'tuples: loop {
                if let Some((sub, quot)) = rep.sub_and_quotient_of(&tuple) {
                    let key = (reg.canonical_class(&quot)?, reg.canonical_class(&sub)?);
                    *profile.entry(key).or_insert(0) += 1;
                }
                for v in 0..idx.len() {
                    idx[v] += 1;
                    if idx[v] < choices[v].len() {
                        tuple[v] = choices[v][idx[v]].clone();
                        continue 'tuples;
                    }
                    idx[v] = 0;
                    tuple[v] = choices[v][0].clone();
                }
                break;
            }
        }
        Ok(profile)
    }

    /// `g^E_{MN}`: subrepresentations of `E` isomorphic to `N` with quotient isomorphic to `M`.
    pub fn hall_number(&self, e: ClassRef, m: ClassRef, n: ClassRef) -> Result<u64> {
        let reg = &self.registry;
        if reg.class(e).dims != &reg.class(m).dims + &reg.class(n).dims {
            return Ok(0);
        }
        Ok(self.profile(e)?.get(&(m, n)).copied().unwrap_or(0))
    }

    /// `P^E_{MN} = g^E_{MN} · a_M · a_N`, the number of exact sequences `0 -> N -> E -> M -> 0`.
    pub fn exact_pair_count(&self, e: ClassRef, m: ClassRef, n: ClassRef) -> Result<BigInt> {
        Ok(BigInt::from(self.hall_number(e, m, n)?) * self.aut(m) * self.aut(n))
    }

    fn check_bound(&self, total: usize) -> Result<()> {
        if total > self.registry.bound() {
            return Err(Error::BoundExceeded {
                total,
                bound: self.registry.bound(),
            });
        }
        Ok(())
    }

    /// `[M]·[N]`.
    pub fn multiply_basis(&self, m: ClassRef, n: ClassRef) -> Result<Arc<GradedVector>> {
        if let Some(v) = self.products.read().unwrap().get(&(m, n)) {
            return Ok(v.clone());
        }
        let reg = &self.registry;
        let dims = &reg.class(m).dims + &reg.class(n).dims;
        self.check_bound(dims.total())?;
        let mut out = self.zero();
        for &e in reg.classes_of(&dims)? {
            let g = self.hall_number(e, m, n)?;
            out.add_term(e, BigRational::from_integer(g.into()));
        }
        let out = Arc::new(out);
        self.products
            .write()
            .unwrap()
            .entry((m, n))
            .or_insert_with(|| out.clone());
        Ok(out)
    }

    pub fn multiply(&self, v: &GradedVector, w: &GradedVector) -> Result<GradedVector> {
        self.check_vector(v)?;
        self.check_vector(w)?;
        let mut out = self.zero();
        for (m, x) in v.terms() {
            for (n, y) in w.terms() {
                out.add_scaled(&*self.multiply_basis(m, n)?, &(x * y));
            }
        }
        Ok(out)
    }

    /// `Δ[E] = Σ g^E_{MN} a_M a_N / a_E · [N] ⊗ [M]` (sub on the left, quotient on the right).
    pub fn comultiply_basis(&self, e: ClassRef) -> Result<Tensor> {
        let ae = self.aut(e);
        let mut out = self.zero_tensor();
        for (&(m, n), &g) in self.profile(e)?.iter() {
            let coeff = BigRational::new(BigInt::from(g) * self.aut(m) * self.aut(n), ae.clone());
            out.add_term(n, m, coeff);
        }
        Ok(out)
    }

    pub fn comultiply(&self, v: &GradedVector) -> Result<Tensor> {
        self.check_vector(v)?;
        let mut out = self.zero_tensor();
        for (e, x) in v.terms() {
            out.add_scaled(&self.comultiply_basis(e)?, x);
        }
        Ok(out)
    }

    /// Braiding coefficient for moving an element of grade `n` past one of grade `m`.
    pub fn braid_coefficient(&self, n: &Grade, m: &Grade) -> BigRational {
        match self.braiding {
            Braiding::Euler => q_power(self.q(), -self.euler.eval(n, m)),
            Braiding::Trivial => BigRational::one(),
        }
    }

    /// `B(x ⊗ y)`, extended bilinearly over homogeneous components.
    pub fn braid(&self, x: &GradedVector, y: &GradedVector) -> Result<Tensor> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let mut out = self.zero_tensor();
        for (a, s) in x.terms() {
            for (b, t) in y.terms() {
                let c = self.braid_coefficient(&self.grade(a), &self.grade(b));
                out.add_term(b, a, c * s * t);
            }
        }
        Ok(out)
    }

    /// Product in `H ⊗ H`: `([B] ⊗ [A])·([D] ⊗ [C]) = c(A, D) [B]·[D] ⊗ [A]·[C]` with `c` the
    /// braiding coefficient.
    pub fn tensor_multiply(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        self.check_tensor(x)?;
        self.check_tensor(y)?;
        let mut out = self.zero_tensor();
        for ((b, a), s) in x.terms() {
            for ((d, c), t) in y.terms() {
                let coeff = self.braid_coefficient(&self.grade(a), &self.grade(d)) * s * t;
                let left = self.multiply_basis(b, d)?;
                let right = self.multiply_basis(a, c)?;
                out.add_outer(&left, &right, &coeff);
            }
        }
        Ok(out)
    }

    /// `(μ ⊗ μ')`: applies `left` to the first slot and `right` to the second and multiplies.
    pub fn multiply_slots<F, G>(&self, t: &Tensor, left: F, right: G) -> Result<GradedVector>
    where
        F: Fn(ClassRef) -> Result<GradedVector>,
        G: Fn(ClassRef) -> Result<GradedVector>,
    {
        self.check_tensor(t)?;
        let mut out = self.zero();
        for ((a, b), x) in t.terms() {
            let prod = self.multiply(&left(a)?, &right(b)?)?;
            out.add_scaled(&prod, x);
        }
        Ok(out)
    }

    /// `ε(v)`: the coefficient of `[0]`.
    pub fn counit(&self, v: &GradedVector) -> BigRational {
        v.coefficient(self.registry.zero())
    }

    /// Splits `v` into its homogeneous components.
    pub fn homogeneous_parts(&self, v: &GradedVector) -> BTreeMap<Grade, GradedVector> {
        let mut parts: BTreeMap<Grade, GradedVector> = BTreeMap::new();
        for (c, x) in v.terms() {
            parts
                .entry(self.grade(c))
                .or_insert_with(|| self.zero())
                .add_term(c, x.clone());
        }
        parts
    }

    pub fn is_homogeneous(&self, v: &GradedVector) -> bool {
        self.homogeneous_parts(v).len() <= 1
    }

    /// `(label, coefficient)` pairs in registry order.
    pub fn render(&self, v: &GradedVector) -> Vec<(String, String)> {
        v.terms()
            .map(|(c, x)| (self.registry.class(c).label.clone(), x.to_string()))
            .collect()
    }

    /// `("N ⊗ M", coefficient)` pairs in registry order.
    pub fn render_tensor(&self, t: &Tensor) -> Vec<(String, String)> {
        t.terms()
            .map(|((a, b), x)| {
                (
                    format!(
                        "{} ⊗ {}",
                        self.registry.class(a).label,
                        self.registry.class(b).label
                    ),
                    x.to_string(),
                )
            })
            .collect()
    }

    pub fn label(&self, c: ClassRef) -> &str {
        &self.registry.class(c).label
    }

    pub fn table_json(&self) -> Result<String> {
        self.table.to_json(&self.registry)
    }

    pub fn load_table_json(&self, text: &str) -> Result<usize> {
        self.table.load_json(&self.registry, text)
    }
}

/// Convenience: `BigRational` from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::DimVector;

    fn a2(q: u32) -> HallAlgebra {
        HallAlgebra::new(Quiver::builtin("a2").unwrap(), Prime::new(q).unwrap(), 4).unwrap()
    }

    #[test]
    fn hall_number_examples() {
        let h = a2(2);
        let r = h.registry().clone();
        let (s1, s2) = (r.by_label("(1,0)").unwrap(), r.by_label("(0,1)").unwrap());
        let split = r.by_label("(1,0)+(0,1)").unwrap();
        let p = r.by_label("(1,1)").unwrap();
        assert_eq!(h.hall_number(split, s1, s2).unwrap(), 1);
        assert_eq!(h.hall_number(p, s1, s2).unwrap(), 1);
        assert_eq!(h.hall_number(p, s2, s1).unwrap(), 0);
        for c in r.classes() {
            assert_eq!(h.hall_number(c.id, c.id, r.zero()).unwrap(), 1);
        }
        // grade shortcut
        assert_eq!(h.hall_number(p, s1, s1).unwrap(), 0);
    }

    #[test]
    fn product_examples() {
        let h = a2(2);
        let s1 = h.basis_by_label("(1,0)").unwrap();
        let s2 = h.basis_by_label("(0,1)").unwrap();
        let split = h.basis_by_label("(1,0)+(0,1)").unwrap();
        let p = h.basis_by_label("(1,1)").unwrap();
        assert_eq!(h.multiply(&h.unit(), &p).unwrap(), p);
        assert_eq!(h.multiply(&s1, &s2).unwrap(), &split + &p);
        assert_eq!(h.multiply(&s2, &s1).unwrap(), split);
        let s1sq = h.multiply(&s1, &s1).unwrap();
        assert_eq!(
            s1sq,
            h.basis_by_label("(1,0)+(1,0)").unwrap().scaled(&rat(3))
        );
    }

    #[test]
    fn products_respect_the_bound() {
        let h = a2(2);
        let big = h.basis_by_label("(1,0)+(1,0)+(0,1)").unwrap();
        let s1 = h.basis_by_label("(1,0)").unwrap();
        assert!(h.multiply(&big, &s1).is_ok());
        assert!(matches!(
            h.multiply(&big, &big),
            Err(Error::BoundExceeded { total: 6, bound: 4 })
        ));
    }

    #[test]
    fn coproduct_examples() {
        let h = a2(2);
        let r = h.registry().clone();
        let z = r.zero();
        let s1 = r.by_label("(1,0)").unwrap();
        let s2 = r.by_label("(0,1)").unwrap();
        let p = r.by_label("(1,1)").unwrap();
        let split = r.by_label("(1,0)+(0,1)").unwrap();

        let dz = h.comultiply(&h.unit()).unwrap();
        assert_eq!(dz.len(), 1);
        assert_eq!(dz.coefficient(z, z), rat(1));

        let dp = h.comultiply(&h.basis(p)).unwrap();
        assert_eq!(dp.len(), 3);
        assert_eq!(dp.coefficient(z, p), rat(1));
        assert_eq!(dp.coefficient(p, z), rat(1));
        assert_eq!(dp.coefficient(s2, s1), rat(1));

        let ds = h.comultiply(&h.basis(split)).unwrap();
        assert_eq!(ds.coefficient(s2, s1), rat(1));
        assert_eq!(ds.coefficient(s1, s2), rat(1));
        assert_eq!(ds.len(), 4);
    }

    #[test]
    fn braid_examples() {
        let h = a2(2);
        let s1 = h.basis_by_label("(1,0)").unwrap();
        let s2 = h.basis_by_label("(0,1)").unwrap();
        let r = h.registry().clone();
        let (c1, c2) = (r.by_label("(1,0)").unwrap(), r.by_label("(0,1)").unwrap());
        assert_eq!(
            h.braid(&h.unit(), &s1).unwrap().coefficient(c1, r.zero()),
            rat(1)
        );
        assert_eq!(h.braid(&s1, &s2).unwrap().coefficient(c2, c1), rat(2));
        assert_eq!(h.braid(&s2, &s1).unwrap().coefficient(c1, c2), rat(1));
        // non-homogeneous first argument splits into graded pieces
        let mixed = &s1 + &s2;
        let b = h.braid(&mixed, &s2).unwrap();
        assert_eq!(b.coefficient(c2, c1), rat(2));
        assert_eq!(b.coefficient(c2, c2), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn tensor_multiply_examples() {
        let h = a2(2);
        let r = h.registry().clone();
        let z = r.zero();
        let (s1, s2) = (r.by_label("(1,0)").unwrap(), r.by_label("(0,1)").unwrap());
        let mut unit = h.zero_tensor();
        unit.add_term(z, z, rat(1));
        let mut x = h.zero_tensor();
        x.add_term(s2, s1, rat(1));
        assert_eq!(h.tensor_multiply(&unit, &x).unwrap(), x);
        assert_eq!(h.tensor_multiply(&x, &unit).unwrap(), x);

        // ([S_2] ⊗ [S_1])·([S_2] ⊗ [S_1]) = 2 [S_2]^2 ⊗ [S_1]^2 = 2·3·3 [2S_2] ⊗ [2S_1]
        let sq = h.tensor_multiply(&x, &x).unwrap();
        let (dd2, dd1) = (
            r.by_label("(0,1)+(0,1)").unwrap(),
            r.by_label("(1,0)+(1,0)").unwrap(),
        );
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coefficient(dd2, dd1), rat(18));

        let trivial = a2(2).with_braiding(Braiding::Trivial);
        let r2 = trivial.registry().clone();
        let mut y = trivial.zero_tensor();
        y.add_term(
            r2.by_label("(0,1)").unwrap(),
            r2.by_label("(1,0)").unwrap(),
            rat(1),
        );
        let sq2 = trivial.tensor_multiply(&y, &y).unwrap();
        assert_eq!(
            sq2.coefficient(
                r2.by_label("(0,1)+(0,1)").unwrap(),
                r2.by_label("(1,0)+(1,0)").unwrap()
            ),
            rat(9)
        );
    }

    #[test]
    fn counit_examples() {
        let h = a2(2);
        assert_eq!(h.counit(&h.unit()), rat(1));
        let s1 = h.basis_by_label("(1,0)").unwrap();
        assert_eq!(h.counit(&s1), rat(0));
        let v = &h.unit().scaled(&rat(2)) + &s1.scaled(&rat(3));
        assert_eq!(h.counit(&v), rat(2));
    }

    #[test]
    fn mixed_instances_are_rejected() {
        let h2 = a2(2);
        let h3 = a2(3);
        let x = h3.basis_by_label("(1,0)").unwrap();
        assert!(matches!(h2.multiply(&x, &x), Err(Error::InstanceMismatch)));
        assert!(matches!(h2.comultiply(&x), Err(Error::InstanceMismatch)));
    }

    #[test]
    fn profiles_are_memoized() {
        let h = a2(3);
        let e = h.registry().by_label("(1,1)").unwrap();
        h.profile(e).unwrap();
        h.profile(e).unwrap();
        assert_eq!(h.table().computed_count(), 1);
        let dims = DimVector(vec![1, 1]);
        assert_eq!(h.registry().classes_of(&dims).unwrap().len(), 2);
    }
}
