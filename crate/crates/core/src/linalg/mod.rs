//! Exact sparse linear algebra over ℚ, 𝔽_p and ℤ.

mod echelon;
pub mod smith;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
pub(crate) use echelon::{Echelon, Field};
pub use smith::{elementary_divisors, smith_diagonal_dense, smith_homology, Homology};

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SparseVec = Vec<(usize, i64)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoefficientRing {
    Rationals,
    PrimeField(u64),
    Integers,
}

impl CoefficientRing {
    pub fn prime_field(p: u64) -> Result<Self> {
        if p < 2 || (2..p).take_while(|q| q * q <= p).any(|q| p % q == 0) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if p > (1 << 31) {
            return Err(Error::InvalidInput(format!("prime {p} too large")));
        }
        Ok(CoefficientRing::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientRing::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientRing::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Canonical representative of an integer in this ring.
    pub fn reduce(&self, x: i64) -> i64 {
        match self {
            CoefficientRing::PrimeField(p) => x.rem_euclid(*p as i64),
            _ => x,
        }
    }

    /// Whether the integer `x` is a unit in this ring.
    pub fn is_unit(&self, x: i64) -> bool {
        match self {
            CoefficientRing::Rationals => x != 0,
            CoefficientRing::PrimeField(p) => x.rem_euclid(*p as i64) != 0,
            CoefficientRing::Integers => x == 1 || x == -1,
        }
    }

    pub(crate) fn field(&self) -> Result<Field> {
        match self {
            CoefficientRing::Rationals => Ok(Field::Rational),
            CoefficientRing::PrimeField(p) => Ok(Field::Prime(*p as i128)),
            CoefficientRing::Integers => Err(Error::FieldRequired(self.to_string())),
        }
    }

    /// The field used for rank computations; ℤ-ranks agree with ℚ-ranks.
    pub(crate) fn rank_field(&self) -> Field {
        match self {
            CoefficientRing::PrimeField(p) => Field::Prime(*p as i128),
            _ => Field::Rational,
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Rationals => write!(f, "q"),
            CoefficientRing::PrimeField(p) => write!(f, "fp:{p}"),
            CoefficientRing::Integers => write!(f, "z"),
        }
    }
}

impl FromStr for CoefficientRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(CoefficientRing::Rationals),
            "z" => Ok(CoefficientRing::Integers),
            other => match other.strip_prefix("fp:") {
                Some(p) => {
                    let p = p.parse::<u64>().map_err(|_| Error::InvalidInput(format!("bad prime in {s:?}")))?;
                    CoefficientRing::prime_field(p)
                }
                None => Err(Error::InvalidInput(format!("unknown ring {s:?}; use q, z or fp:<p>"))),
            },
        }
    }
}

/// Column-major sparse integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { nrows: n, cols: (0..n).map(|i| vec![(i, 1)]).collect() }
    }

    /// Columns may be unsorted and contain duplicates or zeros.
    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Result<Self> {
        let cols = cols.into_iter().map(normalize).collect::<Vec<_>>();
        if let Some(bad) = cols.iter().flat_map(|c| c.iter()).find(|e| e.0 >= nrows) {
            return Err(Error::DimensionMismatch(format!("row index {} with {} rows", bad.0, nrows)));
        }
        Ok(SparseMatrix { nrows, cols })
    }

    pub fn from_triplets(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> Result<Self> {
        let mut cols = vec![Vec::new(); ncols];
        for &(r, c, v) in entries {
            if c >= ncols {
                return Err(Error::DimensionMismatch(format!("column index {c} with {ncols} columns")));
            }
            cols[c].push((r, v));
        }
        SparseMatrix::from_columns(nrows, cols)
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| (0..nrows).filter(|&i| rows[i][j] != 0).map(|i| (i, rows[i][j])).collect())
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        match self.cols[j].binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.cols[j][k].1,
            Err(_) => 0,
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols()]; self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, v) in c {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, v) in c {
                cols[i].push((j, v));
            }
        }
        SparseMatrix { nrows: self.ncols(), cols }
    }

    /// Entries reduced into the ring (mod p for prime fields).
    pub fn reduce(&self, ring: CoefficientRing) -> SparseMatrix {
        match ring {
            CoefficientRing::PrimeField(_) => SparseMatrix {
                nrows: self.nrows,
                cols: self
                    .cols
                    .iter()
                    .map(|c| c.iter().map(|&(i, v)| (i, ring.reduce(v))).filter(|e| e.1 != 0).collect())
                    .collect(),
            },
            _ => self.clone(),
        }
    }

    pub fn apply(&self, x: &[(usize, i64)]) -> Result<SparseVec> {
        let mut acc: Vec<(usize, i64)> = Vec::new();
        for &(j, a) in x {
            for &(i, v) in &self.cols[j] {
                let t = a.checked_mul(v).ok_or(Error::Overflow("matrix-vector product"))?;
                acc.push((i, t));
            }
        }
        let mut out: SparseVec = Vec::new();
        acc.sort_unstable_by_key(|e| e.0);
        for (i, v) in acc {
            match out.last_mut() {
                Some(last) if last.0 == i => {
                    last.1 = last.1.checked_add(v).ok_or(Error::Overflow("matrix-vector product"))?
                }
                _ => out.push((i, v)),
            }
        }
        out.retain(|e| e.1 != 0);
        Ok(out)
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols() != rhs.nrows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows,
                self.ncols(),
                rhs.nrows,
                rhs.ncols()
            )));
        }
        let cols = rhs.cols.iter().map(|c| self.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix { nrows: self.nrows, cols })
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> SparseMatrix {
        SparseMatrix { nrows: self.nrows, cols: cols.iter().map(|&j| self.cols[j].clone()).collect() }
    }

    /// Restriction to the given rows and columns, reindexed by position.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let pos: std::collections::HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let cols = cols
            .iter()
            .map(|&j| {
                let mut c: SparseVec = self.cols[j].iter().filter_map(|&(i, v)| pos.get(&i).map(|&k| (k, v))).collect();
                c.sort_unstable_by_key(|e| e.0);
                c
            })
            .collect();
        SparseMatrix { nrows: rows.len(), cols }
    }

    pub fn hstack(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.nrows != rhs.nrows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(rhs.cols.iter().cloned());
        Ok(SparseMatrix { nrows: self.nrows, cols })
    }

    pub fn scale(&self, k: i64) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| c.iter().map(|&(i, v)| (i, v * k)).filter(|e| e.1 != 0).collect()).collect(),
        }
    }

    /// True iff every entry vanishes in `ring`.
    pub fn is_zero_in(&self, ring: CoefficientRing) -> bool {
        self.cols.iter().all(|c| c.iter().all(|&(_, v)| ring.reduce(v) == 0))
    }
}

pub(crate) fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// A subspace of `k^ambient_dim` given by independent basis columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: SparseMatrix,
}

impl Subspace {
    /// Checks independence over `ring`.
    pub fn new(basis: SparseMatrix, ring: CoefficientRing) -> Result<Self> {
        let r = rank(&basis, ring)?;
        if r != basis.ncols() {
            return Err(Error::ViolatedFreeness(format!("{} columns of rank {}", basis.ncols(), r)));
        }
        Ok(Subspace { basis })
    }

    /// A basis of the column span of `a`.
    pub fn span(a: &SparseMatrix, ring: CoefficientRing) -> Result<Self> {
        Ok(rank_kernel_image(a, ring)?.image)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { basis: SparseMatrix::zero(ambient_dim, 0) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &SparseMatrix {
        &self.basis
    }
}

#[derive(Debug, Clone)]
pub struct RankKernelImage {
    pub rank: usize,
    pub kernel: Subspace,
    pub image: Subspace,
}

/// Rank over `ring`; over ℤ this is the rank over ℚ.
pub fn rank(a: &SparseMatrix, ring: CoefficientRing) -> Result<usize> {
    let mut ech = Echelon::new(ring.rank_field(), a.nrows(), false);
    for c in a.columns() {
        ech.insert(c, 0)?;
    }
    Ok(ech.rank())
}

pub fn rank_kernel_image(a: &SparseMatrix, ring: CoefficientRing) -> Result<RankKernelImage> {
    let field = ring.field()?;
    let mut ech = Echelon::new(field, a.nrows(), true);
    let mut kernel = Vec::new();
    let mut image = Vec::new();
    for (j, c) in a.columns().iter().enumerate() {
        match ech.insert(c, j)? {
            Some(rel) => kernel.push(to_i64(rel, field)?),
            None => image.push(c.iter().map(|&(i, v)| (i, ring.reduce(v))).filter(|e| e.1 != 0).collect()),
        }
    }
    Ok(RankKernelImage {
        rank: ech.rank(),
        kernel: Subspace { basis: SparseMatrix { nrows: a.ncols(), cols: kernel } },
        image: Subspace { basis: SparseMatrix { nrows: a.nrows(), cols: image } },
    })
}

/// Coordinates `c` with `B·c = denom·v` (`denom = 1` over prime fields).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinates {
    pub values: Vec<i128>,
    pub denom: i128,
}

pub fn solve_in_span(b: &Subspace, v: &[(usize, i64)], ring: CoefficientRing) -> Result<Option<Coordinates>> {
    if v.iter().any(|e| e.0 >= b.ambient_dim()) {
        return Err(Error::DimensionMismatch("vector longer than ambient".into()));
    }
    let field = ring.field()?;
    let mut ech = Echelon::new(field, b.ambient_dim(), true);
    for (j, c) in b.basis.columns().iter().enumerate() {
        ech.insert(c, j)?;
    }
    let marker = b.dim();
    let (main, tag) = ech.reduce(v, marker)?;
    if !main.is_empty() {
        return Ok(None);
    }
    let c0 = tag.iter().find(|e| e.0 == marker).map(|e| e.1).expect("marker coefficient");
    let mut values = vec![0i128; b.dim()];
    match field {
        Field::Rational => {
            let s = if c0 < 0 { 1 } else { -1 };
            for &(k, t) in &tag {
                if k != marker {
                    values[k] = s * t;
                }
            }
            Ok(Some(Coordinates { values, denom: c0.abs() }))
        }
        Field::Prime(p) => {
            let inv = echelon::inv_mod(c0, p);
            for &(k, t) in &tag {
                if k != marker {
                    values[k] = (-t * inv).rem_euclid(p);
                }
            }
            Ok(Some(Coordinates { values, denom: 1 }))
        }
    }
}

/// Whether every column of `w` lies in the span of `u`.
pub fn contains(u: &Subspace, w: &Subspace, ring: CoefficientRing) -> Result<bool> {
    let field = ring.rank_field();
    let mut ech = Echelon::new(field, u.ambient_dim(), false);
    for c in u.basis.columns() {
        ech.insert(c, 0)?;
    }
    for c in w.basis.columns() {
        if !ech.reduce(c, 0)?.0.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each `v`, whether it lies in the column span of `a`.
pub fn span_contains(a: &SparseMatrix, vs: &[SparseVec], ring: CoefficientRing) -> Result<Vec<bool>> {
    let mut ech = Echelon::new(ring.rank_field(), a.nrows(), false);
    for c in a.columns() {
        ech.insert(c, 0)?;
    }
    vs.iter().map(|v| Ok(ech.reduce(v, 0)?.0.is_empty())).collect()
}

pub fn intersect(u: &Subspace, w: &Subspace, ring: CoefficientRing) -> Result<Subspace> {
    if u.ambient_dim() != w.ambient_dim() {
        return Err(Error::DimensionMismatch(format!("ambient {} vs {}", u.ambient_dim(), w.ambient_dim())));
    }
    let stacked = u.basis.hstack(&w.basis.scale(-1))?;
    let k = rank_kernel_image(&stacked, ring)?.kernel;
    let du = u.dim();
    let mut cols = Vec::with_capacity(k.dim());
    for x in k.basis.columns() {
        let xu: SparseVec = x.iter().copied().filter(|e| e.0 < du).collect();
        cols.push(u.basis.reduce(ring).apply(&xu)?.into_iter().map(|(i, v)| (i, ring.reduce(v))).filter(|e| e.1 != 0).collect());
    }
    Ok(Subspace { basis: SparseMatrix { nrows: u.ambient_dim(), cols } })
}

fn to_i64(v: Vec<(usize, i128)>, field: Field) -> Result<SparseVec> {
    v.into_iter()
        .map(|(i, x)| {
            let x = match field {
                Field::Prime(p) => x.rem_euclid(p),
                Field::Rational => x,
            };
            i64::try_from(x).map(|x| (i, x)).map_err(|_| Error::Overflow("kernel vector"))
        })
        .collect()
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
                .prop_map(|rows| SparseMatrix::from_dense(&rows))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_and_mod_p(a in matrix()) {
            let q = rank_kernel_image(&a, CoefficientRing::Rationals).unwrap();
            prop_assert_eq!(q.rank + q.kernel.dim(), a.ncols());
            prop_assert!(a.mul(q.kernel.basis()).unwrap().is_zero());
            for p in [2u64, 3, 5] {
                let ring = CoefficientRing::PrimeField(p);
                let f = rank_kernel_image(&a, ring).unwrap();
                prop_assert!(f.rank <= q.rank);
                prop_assert_eq!(f.rank + f.kernel.dim(), a.ncols());
                prop_assert!(a.mul(f.kernel.basis()).unwrap().is_zero_in(ring));
            }
            prop_assert_eq!(rank(&a.transpose(), CoefficientRing::Rationals).unwrap(), q.rank);
        }

        #[test]
        fn solve_reproduces_vector(a in matrix(), x in proptest::collection::vec(-3i64..=3, 6)) {
            let ring = CoefficientRing::Rationals;
            let span = Subspace::span(&a, ring).unwrap();
            let xs: SparseVec = x.iter().take(a.ncols()).enumerate().filter(|e| *e.1 != 0).map(|(i, &v)| (i, v)).collect();
            let v = a.apply(&xs).unwrap();
            let c = solve_in_span(&span, &v, ring).unwrap().unwrap();
            let cs: SparseVec = c.values.iter().enumerate().filter(|e| *e.1 != 0).map(|(i, &v)| (i, v as i64)).collect();
            let back = span.basis().apply(&cs).unwrap();
            let scaled: SparseVec = v.iter().map(|&(i, t)| (i, t * c.denom as i64)).collect();
            prop_assert_eq!(back, scaled);
        }
    }
}
