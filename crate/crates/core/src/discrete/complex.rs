use std::collections::BTreeMap;
use std::collections::HashMap;

use super::DiscreteError;

/// Formal integer combination of cells of one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub terms: Vec<(usize, i64)>,
}

impl Chain {
    pub fn new(degree: usize, terms: Vec<(usize, i64)>) -> Self {
        Self { degree, terms }
    }

    pub fn empty(degree: usize) -> Self {
        Self::new(degree, Vec::new())
    }

    /// Every cell in `0..n` with coefficient one.
    pub fn all(degree: usize, n: usize) -> Self {
        Self::new(degree, (0..n).map(|i| (i, 1)).collect())
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.degree, self.terms.iter().map(|&(c, k)| (c, -k)).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.terms.iter().all(|&(_, k)| k == 0)
    }

    /// Sum of two chains of the same degree; terms are concatenated, not merged.
    pub fn plus(&self, other: &Chain) -> Result<Chain, DiscreteError> {
        if self.degree != other.degree {
            return Err(DiscreteError::Degree {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Ok(Chain::new(self.degree, terms))
    }
}

/// A finite oriented cell complex of dimension at most 3.
///
/// `boundary[k-1][c]` lists the signed faces of the `k`-cell `c`. Optional
/// geometry: vertex coordinates, explicit edge lengths, and a fundamental
/// chain of top cells whose boundary is the designated boundary of the
/// complex.
#[derive(Clone, Debug, PartialEq)]
pub struct CellComplex {
    counts: Vec<usize>,
    boundary: Vec<Vec<Vec<(usize, i64)>>>,
    coords: Option<Vec<Vec<f64>>>,
    edge_lengths: Option<Vec<f64>>,
    fundamental: Option<Chain>,
}

impl CellComplex {
    pub fn new(
        counts: Vec<usize>,
        boundary: Vec<Vec<Vec<(usize, i64)>>>,
    ) -> Result<Self, DiscreteError> {
        if counts.is_empty() || counts.len() > 4 {
            return Err(DiscreteError::Complex(format!(
                "dimension must be 0..=3, got {} cell counts",
                counts.len()
            )));
        }
        if boundary.len() != counts.len() - 1 {
            return Err(DiscreteError::Complex(format!(
                "expected boundary lists for dimensions 1..={}, got {}",
                counts.len() - 1,
                boundary.len()
            )));
        }
        for (k, lists) in boundary.iter().enumerate() {
            let dim = k + 1;
            if lists.len() != counts[dim] {
                return Err(DiscreteError::Complex(format!(
                    "dimension {dim}: {} boundary lists for {} cells",
                    lists.len(),
                    counts[dim]
                )));
            }
            for (c, list) in lists.iter().enumerate() {
                if let Some(&(b, _)) = list.iter().find(|&&(b, _)| b >= counts[dim - 1]) {
                    return Err(DiscreteError::Complex(format!(
                        "cell {c} of dimension {dim} references missing cell {b} of dimension {}",
                        dim - 1
                    )));
                }
            }
        }
        let cx = Self {
            counts,
            boundary,
            coords: None,
            edge_lengths: None,
            fundamental: None,
        };
        for dim in 2..cx.counts.len() {
            for c in 0..cx.counts[dim] {
                let chain = Chain::new(dim, vec![(c, 1)]);
                let dd = cx.boundary_chain(&cx.boundary_chain(&chain)?)?;
                if !dd.is_empty() {
                    return Err(DiscreteError::Complex(format!(
                        "boundary of boundary of cell {c} of dimension {dim} is not zero"
                    )));
                }
            }
        }
        Ok(cx)
    }

    /// Surface from oriented triangles on vertices `0..n_vertices`. Edges are
    /// created in order of first appearance, oriented from the smaller to the
    /// larger vertex index.
    pub fn from_triangles(n_vertices: usize, triangles: &[[usize; 3]]) -> Result<Self, DiscreteError> {
        let mut edge_index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges: Vec<Vec<(usize, i64)>> = Vec::new();
        let mut faces = Vec::with_capacity(triangles.len());
        for (f, t) in triangles.iter().enumerate() {
            if t.iter().any(|&v| v >= n_vertices) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(DiscreteError::Complex(format!("triangle {f} is invalid: {t:?}")));
            }
            let mut face = Vec::with_capacity(3);
            for i in 0..3 {
                let (a, b) = (t[i], t[(i + 1) % 3]);
                let key = (a.min(b), a.max(b));
                let e = *edge_index.entry(key).or_insert_with(|| {
                    edges.push(vec![(key.0, -1), (key.1, 1)]);
                    edges.len() - 1
                });
                face.push((e, if a < b { 1 } else { -1 }));
            }
            faces.push(face);
        }
        Self::new(vec![n_vertices, edges.len(), faces.len()], vec![edges, faces])
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    /// Number of cells of dimension `k` (zero above the top dimension).
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Signed faces of the `k`-cell `c`, `k ≥ 1`.
    pub fn boundary_of(&self, k: usize, c: usize) -> &[(usize, i64)] {
        &self.boundary[k - 1][c]
    }

    /// All boundary lists, indexed by dimension minus one.
    pub fn boundary_lists(&self) -> &[Vec<Vec<(usize, i64)>>] {
        &self.boundary
    }

    pub fn check_chain(&self, chain: &Chain) -> Result<(), DiscreteError> {
        let n = self.count(chain.degree);
        if chain.degree > self.dim() {
            return Err(DiscreteError::DegreeOverflow(chain.degree));
        }
        if let Some(&(c, _)) = chain.terms.iter().find(|&&(c, _)| c >= n) {
            return Err(DiscreteError::Complex(format!(
                "chain references missing cell {c} of dimension {}",
                chain.degree
            )));
        }
        Ok(())
    }

    /// `∂` of a chain, with coefficients merged and sorted by cell index.
    pub fn boundary_chain(&self, chain: &Chain) -> Result<Chain, DiscreteError> {
        self.check_chain(chain)?;
        if chain.degree == 0 {
            return Err(DiscreteError::DegreeOverflow(0));
        }
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(c, k) in &chain.terms {
            for &(b, s) in self.boundary_of(chain.degree, c) {
                *acc.entry(b).or_insert(0) += k * s;
            }
        }
        Ok(Chain::new(
            chain.degree - 1,
            acc.into_iter().filter(|&(_, k)| k != 0).collect(),
        ))
    }

    pub fn is_cycle(&self, chain: &Chain) -> Result<bool, DiscreteError> {
        if chain.degree == 0 {
            return Ok(true);
        }
        Ok(self.boundary_chain(chain)?.is_empty())
    }

    /// `(tail, head)` of an edge.
    pub fn edge_endpoints(&self, e: usize) -> Result<(usize, usize), DiscreteError> {
        let b = self.boundary_of(1, e);
        let tail = b.iter().find(|&&(_, s)| s == -1).map(|&(v, _)| v);
        let head = b.iter().find(|&&(_, s)| s == 1).map(|&(v, _)| v);
        match (tail, head, b.len()) {
            (Some(t), Some(h), 2) => Ok((t, h)),
            _ => Err(DiscreteError::Complex(format!(
                "edge {e} does not have boundary head − tail"
            ))),
        }
    }

    pub fn with_coords(mut self, coords: Vec<Vec<f64>>) -> Result<Self, DiscreteError> {
        if coords.len() != self.count(0) {
            return Err(DiscreteError::Length {
                what: "coords",
                expected: self.count(0),
                found: coords.len(),
            });
        }
        let d = coords.first().map_or(0, Vec::len);
        if coords.iter().any(|c| c.len() != d || c.iter().any(|x| !x.is_finite())) {
            return Err(DiscreteError::Complex(
                "coordinates must be finite and of equal dimension".into(),
            ));
        }
        self.coords = Some(coords);
        Ok(self)
    }

    pub fn with_edge_lengths(mut self, lengths: Vec<f64>) -> Result<Self, DiscreteError> {
        if lengths.len() != self.count(1) {
            return Err(DiscreteError::Length {
                what: "edge_lengths",
                expected: self.count(1),
                found: lengths.len(),
            });
        }
        if lengths.iter().any(|&l| !(l.is_finite() && l > 0.0)) {
            return Err(DiscreteError::Complex("edge lengths must be positive".into()));
        }
        self.edge_lengths = Some(lengths);
        Ok(self)
    }

    pub fn with_fundamental(mut self, chain: Chain) -> Result<Self, DiscreteError> {
        self.check_chain(&chain)?;
        if chain.degree != self.dim() {
            return Err(DiscreteError::Degree {
                expected: self.dim(),
                found: chain.degree,
            });
        }
        self.fundamental = Some(chain);
        Ok(self)
    }

    /// The sum of all top cells, each with coefficient one.
    pub fn with_all_top_cells(self) -> Self {
        let chain = Chain::all(self.dim(), self.count(self.dim()));
        self.with_fundamental(chain).expect("top cells exist")
    }

    pub fn coords(&self) -> Option<&[Vec<f64>]> {
        self.coords.as_deref()
    }

    pub fn fundamental(&self) -> Option<&Chain> {
        self.fundamental.as_ref()
    }

    /// `∂` of the fundamental chain.
    pub fn boundary_of_fundamental(&self) -> Result<Chain, DiscreteError> {
        let w = self.fundamental.as_ref().ok_or(DiscreteError::BoundaryNotSet)?;
        self.boundary_chain(w)
    }

    /// Explicit edge lengths, or lengths computed from vertex coordinates.
    pub fn edge_lengths(&self) -> Result<Vec<f64>, DiscreteError> {
        if let Some(l) = &self.edge_lengths {
            return Ok(l.clone());
        }
        let coords = self.coords.as_ref().ok_or(DiscreteError::MissingGeometry)?;
        (0..self.count(1))
            .map(|e| {
                let (t, h) = self.edge_endpoints(e)?;
                Ok(coords[t]
                    .iter()
                    .zip(&coords[h])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt())
            })
            .collect()
    }

    pub fn has_explicit_lengths(&self) -> bool {
        self.edge_lengths.is_some()
    }
}
