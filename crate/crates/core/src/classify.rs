//! Isomorphism classes of representations by brute-force orbit enumeration.
//!
//! For a dimension vector `d` every tuple of edge matrices is encoded as an integer (its entries
//! read as base-`p` digits). The base-change group `∏_v GL_{d_v}` acts on these codes; orbits
//! are found with a union-find over the action of a generating set, and automorphism group
//! orders follow from orbit–stabilizer. Decomposition labels are recovered afterwards: a class is
//! decomposable exactly when it is hit by `X ⊕ Y` for some indecomposable `X` of smaller
//! dimension.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gfq::{gl_order, Matrix, Prime};
use crate::quiver::{DimVector, Quiver};
use crate::rep::Representation;

pub const DEFAULT_DIM_BOUND: usize = 4;

/// Largest number of edge-matrix tuples enumerated for a single dimension vector.
pub const MAX_REPRESENTATIONS: u64 = 1 << 20;

/// Index of an isomorphism class inside its [`ClassRegistry`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassRef(pub u32);

impl ClassRef {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
pub struct IsoClass {
    pub id: ClassRef,
    /// Sorted indecomposable dimension vectors joined by `+`, or `0` for the zero class.
    pub label: String,
    pub dims: DimVector,
    pub aut_order: u128,
    pub orbit_size: u128,
    pub summands: Vec<DimVector>,
    pub indecomposable: bool,
    pub representative: Representation,
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

pub fn label_for(summands: &[DimVector]) -> String {
    if summands.is_empty() {
        return "0".to_string();
    }
    let mut s = summands.to_vec();
    s.sort_by(DimVector::label_order);
    s.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

/// Where each edge matrix sits in the flat digit string of a code.
#[derive(Debug, Clone)]
struct Layout {
    p: u32,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    digits: usize,
}

impl Layout {
    fn new(quiver: &Quiver, p: Prime, d: &DimVector) -> Self {
        let mut shapes = Vec::new();
        let mut offsets = Vec::new();
        let mut digits = 0;
        for &(s, t) in quiver.edges() {
            shapes.push((d.0[t], d.0[s]));
            offsets.push(digits);
            digits += d.0[t] * d.0[s];
        }
        Layout {
            p: p.get(),
            shapes,
            offsets,
            digits,
        }
    }

    fn count(&self) -> Option<u64> {
        (self.p as u64).checked_pow(self.digits as u32)
    }

    fn decode(&self, mut code: u64, out: &mut [u32]) {
        for x in out.iter_mut() {
            *x = (code % self.p as u64) as u32;
            code /= self.p as u64;
        }
    }

    fn encode(&self, digits: &[u32]) -> u64 {
        digits
            .iter()
            .rev()
            .fold(0u64, |acc, &x| acc * self.p as u64 + x as u64)
    }

    fn encode_maps(&self, maps: &[Matrix]) -> u64 {
        let digits: Vec<u32> = maps
            .iter()
            .flat_map(|m| m.entries().iter().copied())
            .collect();
        self.encode(&digits)
    }

    fn maps(&self, p: Prime, code: u64) -> Vec<Matrix> {
        let mut digits = vec![0; self.digits];
        self.decode(code, &mut digits);
        self.shapes
            .iter()
            .zip(&self.offsets)
            .map(|(&(r, c), &o)| Matrix::from_raw(p, r, c, digits[o..o + r * c].to_vec()))
            .collect()
    }
}

/// Generators of `GL_n(F_p)`: elementary transvections and one diagonal scaling by a primitive
/// root, each paired with its inverse.
fn gl_generators(p: Prime, n: usize) -> Vec<(Matrix, Matrix)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut t = Matrix::identity(p, n);
            t.set(i, j, 1);
            let mut ti = Matrix::identity(p, n);
            ti.set(i, j, p.get() - 1);
            out.push((t, ti));
        }
    }
    let g = p.primitive_root();
    if n > 0 && g != 1 {
        let mut d = Matrix::identity(p, n);
        d.set(0, 0, g);
        let mut di = Matrix::identity(p, n);
        di.set(0, 0, p.inv(g).unwrap());
        out.push((d, di));
    }
    out
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let parent = self.0[x as usize];
            self.0[x as usize] = self.0[parent as usize];
            x = parent;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller code as root so roots are orbit minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi as usize] = lo;
        }
    }
}

/// Orbits of the base-change action for one dimension vector.
struct Orbits {
    layout: Layout,
    /// code -> local orbit index
    lookup: Vec<u32>,
    /// per orbit: (minimal code, size)
    orbits: Vec<(u64, u64)>,
}

fn feasible_count(layout: &Layout, p: Prime, d: &DimVector) -> Result<u64> {
    layout
        .count()
        .filter(|&c| c <= MAX_REPRESENTATIONS)
        .ok_or_else(|| {
            Error::Infeasible(format!(
                "dimension vector {d} has {}^{} edge-matrix tuples",
                p, layout.digits
            ))
        })
}

fn compute_orbits(quiver: &Quiver, p: Prime, d: &DimVector) -> Result<Orbits> {
    let layout = Layout::new(quiver, p, d);
    let count = feasible_count(&layout, p, d)?;

    // One generator acting at vertex v: g on maps into v, g^{-1} on maps out of v.
    struct Gen {
        incoming: Vec<usize>,
        outgoing: Vec<usize>,
        g: Matrix,
        g_inv: Matrix,
    }
    let mut gens = Vec::new();
    for v in 0..quiver.vertex_count() {
        let incoming: Vec<usize> = (0..quiver.edges().len())
            .filter(|&e| quiver.edges()[e].1 == v)
            .collect();
        let outgoing: Vec<usize> = (0..quiver.edges().len())
            .filter(|&e| quiver.edges()[e].0 == v)
            .collect();
        if incoming.is_empty() && outgoing.is_empty() {
            continue;
        }
        for (g, g_inv) in gl_generators(p, d.0[v]) {
            gens.push(Gen {
                incoming: incoming.clone(),
                outgoing: outgoing.clone(),
                g,
                g_inv,
            });
        }
    }

    let mut uf = UnionFind((0..count as u32).collect());
    let mut digits = vec![0u32; layout.digits];
    for code in 0..count {
        layout.decode(code, &mut digits);
        for gen in &gens {
            let mut moved = digits.clone();
            let mut touched = vec![false; layout.shapes.len()];
            for &e in gen.incoming.iter().chain(&gen.outgoing) {
                if touched[e] {
                    continue;
                }
                touched[e] = true;
                let (r, c) = layout.shapes[e];
                let o = layout.offsets[e];
                let mut m = Matrix::from_raw(p, r, c, digits[o..o + r * c].to_vec());
                if gen.incoming.contains(&e) {
                    m = gen.g.mul(&m);
                }
                if gen.outgoing.contains(&e) {
                    m = m.mul(&gen.g_inv);
                }
                moved[o..o + r * c].copy_from_slice(m.entries());
            }
            uf.union(code as u32, layout.encode(&moved) as u32);
        }
    }

    let mut lookup = vec![0u32; count as usize];
    let mut orbits: Vec<(u64, u64)> = Vec::new();
    let mut root_index: HashMap<u32, u32> = HashMap::new();
    for code in 0..count as u32 {
        let root = uf.find(code);
        let idx = *root_index.entry(root).or_insert_with(|| {
            orbits.push((code as u64, 0));
            (orbits.len() - 1) as u32
        });
        orbits[idx as usize].1 += 1;
        lookup[code as usize] = idx;
    }
    Ok(Orbits {
        layout,
        lookup,
        orbits,
    })
}

struct DimTable {
    layout: Layout,
    lookup: Vec<u32>,
    classes: Vec<ClassRef>,
}

/// Every isomorphism class of representations with total dimension at most `bound`.
///
/// Built once per `(quiver, p, bound)` and then shared read-only.
pub struct ClassRegistry {
    quiver: Arc<Quiver>,
    p: Prime,
    bound: usize,
    classes: Vec<IsoClass>,
    tables: BTreeMap<DimVector, DimTable>,
    by_label: HashMap<String, ClassRef>,
}

impl fmt::Debug for ClassRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassRegistry")
            .field("quiver", &self.quiver.describe())
            .field("p", &self.p)
            .field("bound", &self.bound)
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl ClassRegistry {
    pub fn build(quiver: Arc<Quiver>, p: Prime, bound: usize) -> Result<Self> {
        let dims = quiver.dim_vectors_up_to(bound);
        // Refuse up front rather than after enumerating everything smaller.
        for d in &dims {
            feasible_count(&Layout::new(&quiver, p, d), p, d)?;
        }
        let orbits: Vec<Orbits> = dims
            .par_iter()
            .map(|d| compute_orbits(&quiver, p, d))
            .collect::<Result<_>>()?;

        let mut classes: Vec<IsoClass> = Vec::new();
        let mut tables = BTreeMap::new();
        for (d, orb) in dims.iter().zip(orbits) {
            let group: u128 = d.0.iter().map(|&n| gl_order(n, p.get() as u64)).product();
            let mut refs = Vec::with_capacity(orb.orbits.len());
            for &(min_code, size) in &orb.orbits {
                let id = ClassRef(classes.len() as u32);
                let size = size as u128;
                assert_eq!(group % size, 0, "orbit size must divide the group order");
                let representative = Representation::new(
                    quiver.clone(),
                    p,
                    d.clone(),
                    orb.layout.maps(p, min_code),
                )?;
                classes.push(IsoClass {
                    id,
                    label: String::new(),
                    dims: d.clone(),
                    aut_order: group / size,
                    orbit_size: size,
                    summands: Vec::new(),
                    indecomposable: false,
                    representative,
                });
                refs.push(id);
            }
            tables.insert(
                d.clone(),
                DimTable {
                    layout: orb.layout,
                    lookup: orb.lookup,
                    classes: refs,
                },
            );
        }

        let mut registry = ClassRegistry {
            quiver,
            p,
            bound,
            classes,
            tables,
            by_label: HashMap::new(),
        };
        registry.assign_labels(&dims)?;
        Ok(registry)
    }

    fn assign_labels(&mut self, dims: &[DimVector]) -> Result<()> {
        for d in dims {
            let here = self.tables[d].classes.clone();
            if d.is_zero() {
                let z = &mut self.classes[here[0].index()];
                z.label = "0".into();
                continue;
            }
            let mut summands: Vec<Option<Vec<DimVector>>> = vec![None; here.len()];
            for a in d.sub_vectors() {
                if a.is_zero() || a == *d {
                    continue;
                }
                let b = d.checked_sub(&a).unwrap();
                for &x in &self.tables[&a].classes {
                    if !self.classes[x.index()].indecomposable {
                        continue;
                    }
                    for &y in &self.tables[&b].classes {
                        let (cx, cy) = (&self.classes[x.index()], &self.classes[y.index()]);
                        let sum = cx.representative.direct_sum(&cy.representative)?;
                        let local = self.local_index(&sum)?;
                        let mut s = cx.summands.clone();
                        s.extend(cy.summands.iter().cloned());
                        s.sort_by(DimVector::label_order);
                        match &summands[local] {
                            Some(existing) if *existing != s => {
                                return Err(Error::Infeasible(format!(
                                    "Krull–Schmidt violated in dimension {d}: {} vs {}",
                                    label_for(existing),
                                    label_for(&s)
                                )))
                            }
                            Some(_) => {}
                            None => summands[local] = Some(s),
                        }
                    }
                }
            }
            for (local, s) in summands.into_iter().enumerate() {
                let c = &mut self.classes[here[local].index()];
                match s {
                    Some(s) => c.summands = s,
                    None => {
                        c.indecomposable = true;
                        c.summands = vec![d.clone()];
                    }
                }
                c.label = label_for(&c.summands);
            }
        }
        for c in &self.classes {
            if self.by_label.insert(c.label.clone(), c.id).is_some() {
                return Err(Error::Infeasible(format!(
                    "two classes share the label {}",
                    c.label
                )));
            }
        }
        Ok(())
    }

    fn local_index(&self, rep: &Representation) -> Result<usize> {
        let table = self.table(rep.dims())?;
        let code = table.layout.encode_maps(rep.maps());
        Ok(table.lookup[code as usize] as usize)
    }

    fn table(&self, d: &DimVector) -> Result<&DimTable> {
        if d.total() > self.bound {
            return Err(Error::BoundExceeded {
                total: d.total(),
                bound: self.bound,
            });
        }
        self.tables
            .get(d)
            .ok_or_else(|| Error::DimensionMismatch(format!("dimension vector {d}")))
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, c: ClassRef) -> &IsoClass {
        &self.classes[c.index()]
    }

    pub fn contains(&self, c: ClassRef) -> bool {
        c.index() < self.classes.len()
    }

    pub fn zero(&self) -> ClassRef {
        ClassRef(0)
    }

    /// Classes of dimension vector `d`, in registry order.
    pub fn classes_of(&self, d: &DimVector) -> Result<&[ClassRef]> {
        Ok(&self.table(d)?.classes)
    }

    pub fn by_label(&self, label: &str) -> Result<ClassRef> {
        let key: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.by_label
            .get(&key)
            .copied()
            .ok_or_else(|| Error::UnknownClass(label.to_string()))
    }

    pub fn simple(&self, v: usize) -> ClassRef {
        let d = DimVector::unit(self.quiver.vertex_count(), v);
        self.tables[&d].classes[0]
    }

    /// The class whose orbit contains `rep`.
    pub fn canonical_class(&self, rep: &Representation) -> Result<ClassRef> {
        if rep.prime() != self.p || **rep.quiver() != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        let table = self.table(rep.dims())?;
        let code = table.layout.encode_maps(rep.maps());
        Ok(table.classes[table.lookup[code as usize] as usize])
    }

    pub fn indecomposables(&self) -> Vec<ClassRef> {
        self.classes
            .iter()
            .filter(|c| c.indecomposable)
            .map(|c| c.id)
            .collect()
    }

    /// Classes with total dimension at most `limit`.
    pub fn classes_up_to(&self, limit: usize) -> Vec<ClassRef> {
        self.classes
            .iter()
            .filter(|c| c.dims.total() <= limit)
            .map(|c| c.id)
            .collect()
    }
}

/// All isomorphism classes with dimension vector `d`.
pub fn classify_dim_vector(p: Prime, quiver: Arc<Quiver>, d: &DimVector) -> Result<Vec<IsoClass>> {
    if d.len() != quiver.vertex_count() {
        return Err(Error::DimensionMismatch(format!("dimension vector {d}")));
    }
    let registry = ClassRegistry::build(quiver, p, d.total())?;
    let refs = registry.classes_of(d)?.to_vec();
    Ok(refs
        .into_iter()
        .map(|c| registry.class(c).clone())
        .collect())
}

/// The indecomposable classes of total dimension at most `bound`.
pub fn indecomposables(p: Prime, quiver: Arc<Quiver>, bound: usize) -> Result<Vec<IsoClass>> {
    let registry = ClassRegistry::build(quiver, p, bound)?;
    Ok(registry
        .indecomposables()
        .into_iter()
        .map(|c| registry.class(c).clone())
        .collect())
}
