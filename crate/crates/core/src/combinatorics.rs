use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeKind {
    Concat,
    NearConcat,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("empty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Composition(parts))
    }

    /// `(d, d, ..., d, r)` with `i` copies of `d`.
    pub fn power_then(d: usize, i: usize, r: usize) -> Result<Self> {
        let mut parts = vec![d; i];
        parts.push(r);
        Composition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    /// Drops the first part; `None` for one-part compositions.
    pub fn rest(&self) -> Option<Composition> {
        if self.0.len() == 1 {
            None
        } else {
            Some(Composition(self.0[1..].to_vec()))
        }
    }

    pub fn prepend(&self, p: usize) -> Result<Composition> {
        let mut parts = vec![p];
        parts.extend_from_slice(&self.0);
        Composition::new(parts)
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    pub fn near_concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    pub fn compose(&self, other: &Composition, kind: ComposeKind) -> Composition {
        match kind {
            ComposeKind::Concat => self.concat(other),
            ComposeKind::NearConcat => self.near_concat(other),
        }
    }

    /// Partial sums `α₁, α₁+α₂, …` excluding the total.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &a in &self.0[..self.0.len() - 1] {
            acc += a;
            out.push(acc);
        }
        out
    }

    /// All compositions of `m`, in lexicographic order.
    pub fn all_of(m: usize) -> Vec<Composition> {
        fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if left == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=left {
                cur.push(p);
                rec(left - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m > 0 {
            rec(m, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramComposeKind {
    DisjointSum,
    Concat,
    NearConcat,
}

/// A finite set of cells `(row, col)`, row 1 at the bottom, normalised so the
/// smallest row and column are both 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    cells: BTreeSet<(usize, usize)>,
}

impl SkewShape {
    pub fn from_cells<I: IntoIterator<Item = (i64, i64)>>(cells: I) -> Result<Self> {
        let raw: Vec<(i64, i64)> = cells.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::UnsupportedDiagram("empty diagram".into()));
        }
        let r0 = raw.iter().map(|c| c.0).min().unwrap();
        let c0 = raw.iter().map(|c| c.1).min().unwrap();
        let cells = raw
            .into_iter()
            .map(|(r, c)| ((r - r0 + 1) as usize, (c - c0 + 1) as usize))
            .collect();
        Ok(SkewShape { cells })
    }

    /// The ribbon `σ(α)`.
    pub fn ribbon(alpha: &Composition) -> SkewShape {
        let mut cells = BTreeSet::new();
        let mut start = 1;
        for (k, &a) in alpha.parts().iter().enumerate() {
            for c in start..start + a {
                cells.insert((k + 1, c));
            }
            start += a - 1;
        }
        SkewShape { cells }
    }

    /// `λ/μ` in English notation (first part is the top row).
    pub fn from_partitions(lambda: &[usize], mu: &[usize]) -> Result<SkewShape> {
        let rows = lambda.len();
        let mut cells = Vec::new();
        for (i, &l) in lambda.iter().enumerate() {
            let m = mu.get(i).copied().unwrap_or(0);
            if m > l {
                return Err(Error::UnsupportedDiagram(format!("mu not contained in lambda at row {i}")));
            }
            for c in m + 1..=l {
                cells.push(((rows - i) as i64, c as i64));
            }
        }
        if mu.len() > lambda.len() || lambda.windows(2).any(|w| w[0] < w[1]) || mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::UnsupportedDiagram("not a pair of partitions".into()));
        }
        SkewShape::from_cells(cells)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.cells.contains(&(row, col))
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn num_rows(&self) -> usize {
        self.cells.iter().map(|c| c.0).max().unwrap_or(0)
    }

    pub fn num_cols(&self) -> usize {
        self.cells.iter().map(|c| c.1).max().unwrap_or(0)
    }

    /// Row sizes bottom-to-top (`rows(D)`); empty rows appear as 0.
    pub fn row_lengths(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_rows()];
        for &(r, _) in &self.cells {
            out[r - 1] += 1;
        }
        out
    }

    /// Column sizes left-to-right (`cols(D)`).
    pub fn col_lengths(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_cols()];
        for &(_, c) in &self.cells {
            out[c - 1] += 1;
        }
        out
    }

    pub fn is_ribbon(&self) -> bool {
        let rows = self.row_lengths();
        if rows.contains(&0) {
            return false;
        }
        let comp = Composition(rows);
        SkewShape::ribbon(&comp) == *self
    }

    /// The composition `α` with `σ(α) = self`, if this is a ribbon.
    pub fn ribbon_composition(&self) -> Option<Composition> {
        if self.is_ribbon() {
            Some(Composition(self.row_lengths()))
        } else {
            None
        }
    }

    /// Presentation as `λ/μ` (English notation), when rows are intervals whose
    /// endpoints weakly increase going up.
    pub fn as_partitions(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let rows = self.num_rows();
        let mut spans = Vec::with_capacity(rows);
        for r in 1..=rows {
            let cols: Vec<usize> = self.cells.range((r, 0)..(r + 1, 0)).map(|c| c.1).collect();
            let (&s, &e) = (cols.first()?, cols.last()?);
            if e - s + 1 != cols.len() {
                return None;
            }
            spans.push((s, e));
        }
        if spans.windows(2).any(|w| w[1].0 < w[0].0 || w[1].1 < w[0].1) {
            return None;
        }
        let lambda = spans.iter().rev().map(|s| s.1).collect();
        let mu = spans.iter().rev().map(|s| s.0 - 1).collect();
        Some((lambda, mu))
    }

    pub fn transpose(&self) -> SkewShape {
        let (rr, cc) = (self.num_rows(), self.num_cols());
        let cells = self.cells.iter().map(|&(r, c)| (cc + 1 - c, rr + 1 - r)).collect();
        SkewShape { cells }
    }

    fn shifted(&self, dr: usize, dc: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().map(move |&(r, c)| (r + dr, c + dc))
    }

    pub fn compose(&self, other: &SkewShape, kind: DiagramComposeKind) -> Result<SkewShape> {
        let (rd, cd) = (self.num_rows(), self.num_cols());
        let (dr, dc) = match kind {
            DiagramComposeKind::DisjointSum => (rd, cd),
            DiagramComposeKind::Concat | DiagramComposeKind::NearConcat => {
                if !self.contains(rd, cd) {
                    return Err(Error::UnsupportedDiagram("first diagram has no northeast-most cell".into()));
                }
                if !other.contains(1, 1) {
                    return Err(Error::UnsupportedDiagram("second diagram has no southwest-most cell".into()));
                }
                if kind == DiagramComposeKind::Concat {
                    (rd, cd - 1)
                } else {
                    (rd - 1, cd)
                }
            }
        };
        let mut cells = self.cells.clone();
        cells.extend(other.shifted(dr, dc));
        Ok(SkewShape { cells })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (1..=self.num_rows()).rev() {
            for c in 1..=self.num_cols() {
                write!(f, "{}", if self.contains(r, c) { '#' } else { '.' })?;
            }
            if r > 1 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauKind {
    ColumnIncreasing,
    Ssyt,
}

/// A filling of a shape; `entries` follow the reading order of the cells
/// (rows bottom-to-top, each left-to-right).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    cells: Vec<(usize, usize)>,
    entries: Vec<u8>,
}

impl Tableau {
    pub fn new(shape: &SkewShape, entries: Vec<u8>) -> Result<Tableau> {
        if entries.len() != shape.num_cells() {
            return Err(Error::InvalidInput(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.num_cells()
            )));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidInput("tableau entries start at 1".into()));
        }
        Ok(Tableau { cells: shape.cells().collect(), entries })
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u8> {
        self.cells.binary_search(&(row, col)).ok().map(|i| self.entries[i])
    }

    pub fn max_entry(&self) -> u8 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn is_column_increasing(&self) -> bool {
        self.cells.iter().zip(&self.entries).all(|(&(r, c), &v)| match self.get(r + 1, c) {
            Some(above) => above < v,
            None => true,
        })
    }

    pub fn is_ssyt(&self) -> bool {
        self.is_column_increasing()
            && self.cells.iter().zip(&self.entries).all(|(&(r, c), &v)| match self.get(r, c + 1) {
                Some(right) => v <= right,
                None => true,
            })
    }

    /// Multiplicities of each value `1..=n`.
    pub fn content(&self, n: usize) -> Vec<u8> {
        let mut out = vec![0u8; n];
        for &v in &self.entries {
            out[v as usize - 1] += 1;
        }
        out
    }
}

/// All fillings of `shape` with entries in `1..=n` of the given kind, in
/// lexicographic order of reading words.
pub fn enumerate_tableaux(shape: &SkewShape, n: usize, kind: TableauKind) -> Vec<Tableau> {
    let mut out = Vec::new();
    visit_tableaux(shape, n, kind, None, |t| out.push(t.clone()));
    out
}

/// Calls `f` on every filling (optionally restricted to one content vector),
/// in the order of [`enumerate_tableaux`].
pub fn visit_tableaux<F: FnMut(&Tableau)>(
    shape: &SkewShape,
    n: usize,
    kind: TableauKind,
    content: Option<&[u8]>,
    mut f: F,
) {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let below: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| if r > 1 { cells.binary_search(&(r - 1, c)).ok() } else { None })
        .collect();
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| if c > 1 { cells.binary_search(&(r, c - 1)).ok() } else { None })
        .collect();
    let mut remaining: Vec<u8> = match content {
        Some(a) => {
            if a.len() != n || a.iter().map(|&x| x as usize).sum::<usize>() != cells.len() {
                return;
            }
            a.to_vec()
        }
        None => vec![u8::MAX; n],
    };
    let mut t = Tableau { cells: cells.clone(), entries: vec![0; cells.len()] };

    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&Tableau)>(
        k: usize,
        n: usize,
        kind: TableauKind,
        below: &[Option<usize>],
        left: &[Option<usize>],
        remaining: &mut [u8],
        t: &mut Tableau,
        f: &mut F,
    ) {
        if k == t.entries.len() {
            f(t);
            return;
        }
        let lo = match (kind, left[k]) {
            (TableauKind::Ssyt, Some(l)) => t.entries[l],
            _ => 1,
        };
        let hi = match below[k] {
            Some(b) => t.entries[b] - 1,
            None => n as u8,
        };
        for v in lo..=hi {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            t.entries[k] = v;
            rec(k + 1, n, kind, below, left, remaining, t, f);
            remaining[v as usize - 1] += 1;
        }
    }
    rec(0, n, kind, &below, &left, &mut remaining, &mut t, &mut f);
}

pub fn count_ssyt(shape: &SkewShape, n: usize) -> usize {
    let mut count = 0;
    visit_tableaux(shape, n, TableauKind::Ssyt, None, |_| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    /// Two non-ribbon skew shapes, given
    /// row by row from the bottom.
    pub(crate) fn sample_shapes() -> (SkewShape, SkewShape) {
        let d = SkewShape::from_cells([(1, 1), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)]).unwrap();
        let mut cells = vec![(1, 1), (1, 2)];
        for r in 2..=3 {
            for c in 1..=4 {
                cells.push((r, c));
            }
        }
        cells.extend([(4, 3), (4, 4)]);
        (d, SkewShape::from_cells(cells).unwrap())
    }

    #[test]
    fn staircase_ribbon() {
        let s = SkewShape::ribbon(&comp(&[3, 1, 1, 2, 4]));
        assert_eq!(s.num_cells(), 11);
        assert_eq!(s.row_lengths(), vec![3, 1, 1, 2, 4]);
        assert_eq!(s.num_cols(), 7);
        assert_eq!(s.to_string(), "...####\n..##...\n..#....\n..#....\n###....");
        assert!(s.is_ribbon());
    }

    #[test]
    fn one_row_and_one_column() {
        let row = SkewShape::ribbon(&comp(&[4]));
        assert_eq!(row.num_rows(), 1);
        assert_eq!(row.num_cols(), 4);
        let col = SkewShape::ribbon(&comp(&[1, 1]));
        assert_eq!(col.num_rows(), 2);
        assert_eq!(col.num_cols(), 1);
    }

    #[test]
    fn invalid_compositions() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert_eq!("(3,1,1,2,4)".parse::<Composition>().unwrap(), comp(&[3, 1, 1, 2, 4]));
        assert!("3,x".parse::<Composition>().is_err());
    }

    #[test]
    fn compose_examples() {
        let a = comp(&[2, 1, 3]);
        let b = comp(&[2, 4, 2]);
        assert_eq!(a.concat(&b), comp(&[2, 1, 3, 2, 4, 2]));
        assert_eq!(a.near_concat(&b), comp(&[2, 1, 5, 4, 2]));
        assert_eq!(comp(&[1]).near_concat(&comp(&[1])), comp(&[2]));
    }

    #[test]
    fn sample_shape_compositions() {
        let (d, dp) = sample_shapes();
        assert_eq!(d.num_cells(), 6);
        assert_eq!(dp.num_cells(), 12);
        assert_eq!(d.as_partitions(), Some((vec![3, 3, 1], vec![1, 0, 0])));
        assert_eq!(dp.as_partitions(), Some((vec![4, 4, 4, 2], vec![2, 0, 0, 0])));
        let sum = d.compose(&dp, DiagramComposeKind::DisjointSum).unwrap();
        let cat = d.compose(&dp, DiagramComposeKind::Concat).unwrap();
        let near = d.compose(&dp, DiagramComposeKind::NearConcat).unwrap();
        assert_eq!(sum.num_cells(), 18);
        assert_eq!((sum.num_rows(), sum.num_cols()), (7, 7));
        assert_eq!(cat.num_cells(), 18);
        assert_eq!((cat.num_rows(), cat.num_cols()), (7, 6));
        assert_eq!(near.num_cells(), 18);
        assert_eq!((near.num_rows(), near.num_cols()), (6, 7));
        // D' sits directly above D's top-right cell / right of it.
        assert!(cat.contains(4, 3) && cat.contains(4, 4));
        assert_eq!(near.row_lengths()[2], 4);
        assert!(cat.as_partitions().is_some());
        assert!(near.as_partitions().is_some());
    }

    #[test]
    fn compose_needs_corner_cells() {
        let l = SkewShape::from_cells([(1, 1), (2, 1), (1, 2)]).unwrap();
        let r = SkewShape::ribbon(&comp(&[2]));
        assert!(matches!(l.compose(&r, DiagramComposeKind::Concat), Err(Error::UnsupportedDiagram(_))));
        assert!(r.compose(&l, DiagramComposeKind::NearConcat).is_ok());
        assert!(l.compose(&r, DiagramComposeKind::DisjointSum).is_ok());
    }

    #[test]
    fn ssyt_counts_match_brute_force() {
        fn brute(shape: &SkewShape, n: u8) -> (usize, usize) {
            let k = shape.num_cells();
            let (mut ci, mut ss) = (0, 0);
            let total = (n as usize).pow(k as u32);
            for code in 0..total {
                let mut c = code;
                let entries: Vec<u8> = (0..k)
                    .map(|_| {
                        let v = (c % n as usize) as u8 + 1;
                        c /= n as usize;
                        v
                    })
                    .collect();
                let t = Tableau::new(shape, entries).unwrap();
                ci += t.is_column_increasing() as usize;
                ss += t.is_ssyt() as usize;
            }
            (ci, ss)
        }
        for parts in [vec![2, 1], vec![1, 1], vec![2, 2, 1], vec![1, 2, 1], vec![3, 2]] {
            let s = SkewShape::ribbon(&comp(&parts));
            for n in 1..=3u8 {
                let (ci, ss) = brute(&s, n);
                assert_eq!(enumerate_tableaux(&s, n as usize, TableauKind::ColumnIncreasing).len(), ci);
                assert_eq!(enumerate_tableaux(&s, n as usize, TableauKind::Ssyt).len(), ss);
            }
        }
        assert_eq!(count_ssyt(&SkewShape::ribbon(&comp(&[2, 1])), 2), 2);
        assert_eq!(count_ssyt(&SkewShape::ribbon(&comp(&[1, 1])), 2), 1);
    }

    #[test]
    fn column_tableau_is_one_over_two() {
        let s = SkewShape::ribbon(&comp(&[1, 1]));
        let ts = enumerate_tableaux(&s, 2, TableauKind::Ssyt);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].get(2, 1), Some(1));
        assert_eq!(ts[0].get(1, 1), Some(2));
    }

    #[test]
    fn one_row_counts() {
        for m in 1..=5 {
            for n in 1..=4 {
                let s = SkewShape::ribbon(&comp(&[m]));
                let expect = (1..=m).fold(1usize, |acc, i| acc * (n + i - 1) / i);
                assert_eq!(count_ssyt(&s, n), expect);
            }
        }
    }

    #[test]
    fn reading_word_order() {
        let s = SkewShape::ribbon(&comp(&[2, 2]));
        let ts = enumerate_tableaux(&s, 3, TableauKind::Ssyt);
        for w in ts.windows(2) {
            assert!(w[0].entries() < w[1].entries());
        }
        let restricted: Vec<Tableau> = {
            let mut v = Vec::new();
            visit_tableaux(&s, 3, TableauKind::Ssyt, Some(&[1, 2, 1]), |t| v.push(t.clone()));
            v
        };
        let filtered: Vec<Tableau> = ts.into_iter().filter(|t| t.content(3) == vec![1, 2, 1]).collect();
        assert_eq!(restricted, filtered);
    }

    #[test]
    fn transposes() {
        let col = SkewShape::ribbon(&comp(&[1, 1]));
        assert_eq!(col.transpose(), SkewShape::ribbon(&comp(&[2])));
        let s = SkewShape::ribbon(&comp(&[3, 1, 1, 2, 4]));
        assert_eq!(s.transpose().transpose(), s);
        assert_eq!(s.transpose().ribbon_composition(), Some(comp(&[1, 1, 1, 2, 4, 1, 1])));
        for i in 0..5 {
            let t = SkewShape::ribbon(&Composition::power_then(2, i, 1).unwrap());
            assert_eq!(t.transpose(), t);
        }
    }

    #[test]
    fn partial_sums_and_all() {
        assert_eq!(comp(&[2, 1, 3]).partial_sums(), vec![2, 3]);
        assert_eq!(Composition::all_of(4).len(), 8);
        assert!(Composition::all_of(0).is_empty());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn composition(max_size: usize) -> impl Strategy<Value = Composition> {
        (1..=max_size).prop_flat_map(|m| {
            let all = Composition::all_of(m);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn ribbon_ops_match_diagram_ops(a in composition(6), b in composition(6)) {
            let (sa, sb) = (SkewShape::ribbon(&a), SkewShape::ribbon(&b));
            prop_assert_eq!(
                SkewShape::ribbon(&a.concat(&b)),
                sa.compose(&sb, DiagramComposeKind::Concat).unwrap()
            );
            prop_assert_eq!(
                SkewShape::ribbon(&a.near_concat(&b)),
                sa.compose(&sb, DiagramComposeKind::NearConcat).unwrap()
            );
            prop_assert_eq!(
                sa.compose(&sb, DiagramComposeKind::DisjointSum).unwrap().num_cells(),
                a.size() + b.size()
            );
        }

        #[test]
        fn mixed_associativity(a in composition(4), b in composition(4), c in composition(4)) {
            prop_assert_eq!(a.concat(&b).near_concat(&c), a.concat(&b.near_concat(&c)));
            prop_assert_eq!(a.near_concat(&b).concat(&c), a.near_concat(&b.concat(&c)));
            prop_assert_eq!(a.near_concat(&b).near_concat(&c), a.near_concat(&b.near_concat(&c)));
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        }

        #[test]
        fn transpose_is_involution_on_ribbons(a in composition(8)) {
            let s = SkewShape::ribbon(&a);
            let t = s.transpose();
            prop_assert!(t.is_ribbon());
            prop_assert_eq!(t.num_cells(), s.num_cells());
            prop_assert_eq!(t.transpose(), s);
        }

        #[test]
        fn ribbons_have_partition_presentations(a in composition(8)) {
            let s = SkewShape::ribbon(&a);
            let (l, m) = s.as_partitions().unwrap();
            prop_assert_eq!(SkewShape::from_partitions(&l, &m).unwrap(), s);
        }
    }
}
