//! Quivers whose underlying graph is a simply-laced Dynkin diagram, and dimension vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const QUIVER_FORMAT_VERSION: u32 = 1;

/// One connected component of a simply-laced Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Number of positive roots, which by Gabriel's theorem is also the number of
    /// indecomposable representations.
    pub fn positive_root_count(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(8) => 120,
            DynkinType::E(_) => unreachable!(),
        }
    }

    /// Total dimension of the largest indecomposable (height of the highest root).
    pub fn highest_root_height(self) -> usize {
        match self {
            DynkinType::A(n) => n,
            DynkinType::D(n) => 2 * n - 3,
            DynkinType::E(6) => 11,
            DynkinType::E(7) => 17,
            DynkinType::E(8) => 29,
            DynkinType::E(_) => unreachable!(),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A_{n}"),
            DynkinType::D(n) => write!(f, "D_{n}"),
            DynkinType::E(n) => write!(f, "E_{n}"),
        }
    }
}

/// The on-disk quiver description: `{"vertices": [...], "edges": [["u","v"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    #[serde(default = "default_format_version")]
    pub format_version: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

fn default_format_version() -> u32 {
    QUIVER_FORMAT_VERSION
}

/// A finite quiver with validated simply-laced Dynkin underlying graph.
///
/// Vertex order fixes the coordinate order of dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    components: Vec<DynkinType>,
}

impl Quiver {
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: Vec<(S, S)>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let edges = edges
            .into_iter()
            .map(|(s, t)| {
                let (s, t): (String, String) = (s.into(), t.into());
                match (index.get(&s), index.get(&t)) {
                    (Some(&a), Some(&b)) => Ok((a, b)),
                    _ => Err(Error::InvalidQuiver(format!(
                        "edge {s:?} -> {t:?} uses an undeclared vertex"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let components = dynkin_components(vertices.len(), &edges)?;
        Ok(Quiver {
            vertices,
            edges,
            components,
        })
    }

    pub fn from_spec(spec: &QuiverSpec) -> Result<Self> {
        if spec.format_version != QUIVER_FORMAT_VERSION {
            return Err(Error::Malformed(format!(
                "unsupported quiver format_version {}",
                spec.format_version
            )));
        }
        Quiver::new(spec.vertices.clone(), spec.edges.clone())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: QuiverSpec = serde_json::from_str(text)?;
        Quiver::from_spec(&spec)
    }

    pub fn spec(&self) -> QuiverSpec {
        QuiverSpec {
            format_version: QUIVER_FORMAT_VERSION,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(s, t)| (self.vertices[s].clone(), self.vertices[t].clone()))
                .collect(),
        }
    }

    /// Built-in quivers by name.
    ///
    /// * `aN`: vertices `1..=N`, edges `i -> i+1`.
    /// * `dN`: vertices `1..=N`, edges `i -> i+1` for `i < N-2` and `N-2 -> N-1`, `N-2 -> N`;
    ///   for `d4` this is the path `1 -> 2` with `2` feeding both `3` and `4`.
    /// * `e6`, `e7`, `e8`: path `1 -> ... -> N-1` with the extra vertex `N` attached by
    ///   `3 -> N`.
    pub fn builtin(name: &str) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        let (kind, n) = lower.split_at(1.min(lower.len()));
        let n: usize = n
            .parse()
            .map_err(|_| Error::UnknownQuiver(name.to_string()))?;
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let edge = |a: usize, b: usize| (names[a - 1].clone(), names[b - 1].clone());
        let edges = match kind {
            "a" if n >= 1 => (1..n).map(|i| edge(i, i + 1)).collect(),
            "d" if n >= 4 => {
                let mut e: Vec<_> = (1..n - 2).map(|i| edge(i, i + 1)).collect();
                e.push(edge(n - 2, n - 1));
                e.push(edge(n - 2, n));
                e
            }
            "e" if (6..=8).contains(&n) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| edge(i, i + 1)).collect();
                e.push(edge(3, n));
                e
            }
            _ => return Err(Error::UnknownQuiver(name.to_string())),
        };
        Quiver::new(names.clone(), edges)
    }

    /// Accepts either a built-in name or a path to a JSON quiver spec.
    pub fn load(name_or_path: &str) -> Result<Self> {
        match Quiver::builtin(name_or_path) {
            Ok(q) => Ok(q),
            Err(Error::UnknownQuiver(_)) if std::path::Path::new(name_or_path).exists() => {
                Quiver::from_json(&std::fs::read_to_string(name_or_path)?)
            }
            Err(e) => Err(e),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn dynkin_type(&self) -> &[DynkinType] {
        &self.components
    }

    pub fn positive_root_count(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.positive_root_count())
            .sum()
    }

    pub fn highest_root_height(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.highest_root_height())
            .max()
            .unwrap_or(0)
    }

    /// Short description such as `A_2 (1->2)`.
    pub fn describe(&self) -> String {
        let types: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(s, t)| format!("{}->{}", self.vertices[s], self.vertices[t]))
            .collect();
        format!("{} ({})", types.join("+"), edges.join(","))
    }

    /// All dimension vectors with total dimension at most `bound`, ordered by total dimension
    /// and then lexicographically.
    pub fn dim_vectors_up_to(&self, bound: usize) -> Vec<DimVector> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut current = vec![0usize; n];
        fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DimVector>) {
            if i == cur.len() {
                out.push(DimVector(cur.clone()));
                return;
            }
            for x in 0..=left {
                cur[i] = x;
                rec(i + 1, left - x, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, bound, &mut current, &mut out);
        out.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
        out
    }
}

/// Checks that every connected component of the underlying graph is A_n, D_n, E_6, E_7 or E_8.
fn dynkin_components(n: usize, edges: &[(usize, usize)]) -> Result<Vec<DynkinType>> {
    if n == 0 {
        return Err(Error::InvalidQuiver("no vertices".into()));
    }
    let mut adj = vec![Vec::new(); n];
    let mut seen_pairs = std::collections::HashSet::new();
    for &(s, t) in edges {
        if s == t {
            return Err(Error::NotDynkin(format!("loop at vertex {s}")));
        }
        if !seen_pairs.insert((s.min(t), s.max(t))) {
            return Err(Error::NotDynkin(
                "multiple edges between two vertices".into(),
            ));
        }
        adj[s].push(t);
        adj[t].push(s);
    }

    let mut comp = vec![usize::MAX; n];
    let mut types = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = types.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
            i += 1;
        }
        let size = members.len();
        let edge_count: usize = members.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if edge_count != size - 1 {
            return Err(Error::NotDynkin("underlying graph contains a cycle".into()));
        }
        let branch: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| adj[v].len() > 2)
            .collect();
        let ty = match branch.as_slice() {
            [] => DynkinType::A(size),
            [c] if adj[*c].len() == 3 => {
                // arm lengths, counted in vertices beyond the centre
                let mut arms: Vec<usize> = adj[*c]
                    .iter()
                    .map(|&first| {
                        let (mut prev, mut cur, mut len) = (*c, first, 1);
                        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                            prev = cur;
                            cur = next;
                            len += 1;
                        }
                        len
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => DynkinType::D(size),
                    [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => DynkinType::E(size),
                    _ => {
                        return Err(Error::NotDynkin(format!(
                            "branch arms {arms:?} do not form a Dynkin diagram"
                        )))
                    }
                }
            }
            _ => {
                return Err(Error::NotDynkin(
                    "more than one branch point or a vertex of degree > 3".into(),
                ))
            }
        };
        types.push(ty);
    }
    Ok(types)
}

/// Per-vertex dimensions of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = vec![0; n];
        d[v] = 1;
        DimVector(d)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference, if `other <= self`.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        other
            .le(self)
            .then(|| DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// All `e` with `0 <= e <= self`, in lexicographic order.
    pub fn sub_vectors(&self) -> Vec<DimVector> {
        let mut out = vec![DimVector(Vec::new())];
        for &d in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=d).map(move |x| {
                        let mut v = prefix.0.clone();
                        v.push(x);
                        DimVector(v)
                    })
                })
                .collect();
        }
        out
    }

    /// Ordering used for decomposition labels: increasing total dimension, then decreasing
    /// lexicographic order, so simples appear in vertex order.
    pub fn label_order(a: &DimVector, b: &DimVector) -> Ordering {
        a.total().cmp(&b.total()).then_with(|| b.cmp(a))
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.0.len(), rhs.0.len());
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for DimVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Malformed(format!("dimension vector {s:?}")))?;
        inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| Error::Malformed(format!("dimension vector {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DimVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_have_expected_types() {
        assert_eq!(
            Quiver::builtin("a2").unwrap().dynkin_type(),
            &[DynkinType::A(2)]
        );
        assert_eq!(
            Quiver::builtin("A3").unwrap().dynkin_type(),
            &[DynkinType::A(3)]
        );
        assert_eq!(
            Quiver::builtin("d4").unwrap().dynkin_type(),
            &[DynkinType::D(4)]
        );
        assert_eq!(
            Quiver::builtin("d6").unwrap().dynkin_type(),
            &[DynkinType::D(6)]
        );
        for n in 6..=8 {
            let q = Quiver::builtin(&format!("e{n}")).unwrap();
            assert_eq!(q.dynkin_type(), &[DynkinType::E(n)]);
        }
        assert!(matches!(
            Quiver::builtin("x3"),
            Err(Error::UnknownQuiver(_))
        ));
        assert!(matches!(
            Quiver::builtin("e9"),
            Err(Error::UnknownQuiver(_))
        ));
    }

    #[test]
    fn rejects_non_dynkin() {
        let cyc = Quiver::new(
            vec!["a", "b", "c"],
            vec![("a", "b"), ("b", "c"), ("c", "a")],
        );
        assert!(matches!(cyc, Err(Error::NotDynkin(_))));
        let e = cyc.unwrap_err().to_string();
        assert!(e.contains("not simply-laced Dynkin"), "{e}");

        let double = Quiver::new(vec!["a", "b"], vec![("a", "b"), ("b", "a")]);
        assert!(matches!(double, Err(Error::NotDynkin(_))));
        let lp = Quiver::new(vec!["a"], vec![("a", "a")]);
        assert!(matches!(lp, Err(Error::NotDynkin(_))));
        // affine D_4 (star with four arms)
        let star = Quiver::new(
            vec!["c", "1", "2", "3", "4"],
            vec![("1", "c"), ("2", "c"), ("3", "c"), ("4", "c")],
        );
        assert!(matches!(star, Err(Error::NotDynkin(_))));
        // affine E_6: arms (2,2,2)
        let e6t = Quiver::new(
            vec!["c", "a1", "a2", "b1", "b2", "d1", "d2"],
            vec![
                ("c", "a1"),
                ("a1", "a2"),
                ("c", "b1"),
                ("b1", "b2"),
                ("c", "d1"),
                ("d1", "d2"),
            ],
        );
        assert!(matches!(e6t, Err(Error::NotDynkin(_))));
        let bad = Quiver::new(vec!["a"], vec![("a", "z")]);
        assert!(matches!(bad, Err(Error::InvalidQuiver(_))));
    }

    #[test]
    fn spec_json_roundtrip() {
        let q = Quiver::from_json(r#"{"vertices": ["x", "y"], "edges": [["y", "x"]]}"#).unwrap();
        assert_eq!(q.edges(), &[(1, 0)]);
        assert_eq!(Quiver::from_spec(&q.spec()).unwrap(), q);
        let v2 = r#"{"format_version": 2, "vertices": ["x"], "edges": []}"#;
        assert!(matches!(Quiver::from_json(v2), Err(Error::Malformed(_))));
    }

    #[test]
    fn dim_vector_helpers() {
        let d = DimVector(vec![1, 2]);
        assert_eq!(d.sub_vectors().len(), 6);
        assert_eq!(d.to_string(), "(1,2)");
        assert_eq!("(1, 2)".parse::<DimVector>().unwrap(), d);
        assert_eq!(
            d.checked_sub(&DimVector(vec![1, 0])),
            Some(DimVector(vec![0, 2]))
        );
        assert_eq!(d.checked_sub(&DimVector(vec![2, 0])), None);
        let q = Quiver::builtin("a2").unwrap();
        let all = q.dim_vectors_up_to(2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], DimVector(vec![0, 0]));
    }
}
