use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Field {
    Rational,
    Prime(i128),
}

type Vec128 = Vec<(usize, i128)>;

#[derive(Debug, Clone)]
struct Row {
    main: Vec128,
    tag: Vec128,
}

/// Incremental column echelon form. Each stored vector has a distinct leading
/// (smallest) index; with tracking on, `tag` records the combination of
/// inserted inputs that produced it, so `main = Σ tag_k · input_k` exactly.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    field: Field,
    track: bool,
    rows: Vec<Row>,
    by_lead: HashMap<usize, usize>,
}

pub(crate) fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn inv_mod(a: i128, p: i128) -> i128 {
    let (mut t, mut new_t, mut r, mut new_r) = (0i128, 1i128, p, a.rem_euclid(p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p)
}

/// `a·x + b·y` for sparse vectors.
fn combine(field: Field, a: i128, x: &[(usize, i128)], b: i128, y: &[(usize, i128)]) -> Result<Vec128> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let ovf = || Error::Overflow("exact elimination");
    let fix = |v: i128| -> i128 {
        match field {
            Field::Prime(p) => v.rem_euclid(p),
            Field::Rational => v,
        }
    };
    while i < x.len() || j < y.len() {
        let (k, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, a.checked_mul(x[i - 1].1).ok_or_else(ovf)?)
        } else if i == x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, b.checked_mul(y[j - 1].1).ok_or_else(ovf)?)
        } else {
            i += 1;
            j += 1;
            let s = a
                .checked_mul(x[i - 1].1)
                .and_then(|u| b.checked_mul(y[j - 1].1).and_then(|w| u.checked_add(w)))
                .ok_or_else(ovf)?;
            (x[i - 1].0, s)
        };
        let v = fix(v);
        if v != 0 {
            out.push((k, v));
        }
    }
    Ok(out)
}

impl Echelon {
    pub(crate) fn new(field: Field, _dim: usize, track: bool) -> Self {
        Echelon { field, track, rows: Vec::new(), by_lead: HashMap::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn start(&self, v: &[(usize, i64)], id: usize) -> (Vec128, Vec128) {
        let main = v
            .iter()
            .map(|&(i, x)| {
                let x = x as i128;
                (i, if let Field::Prime(p) = self.field { x.rem_euclid(p) } else { x })
            })
            .filter(|e| e.1 != 0)
            .collect();
        let tag = if self.track { vec![(id, 1)] } else { Vec::new() };
        (main, tag)
    }

    /// Reduces `v` until its leading index has no pivot. Returns the residual
    /// and its tag (with `id` standing for `v`).
    pub(crate) fn reduce(&self, v: &[(usize, i64)], id: usize) -> Result<(Vec128, Vec128)> {
        let (mut main, mut tag) = self.start(v, id);
        while let Some(&(lead, a)) = main.first() {
            let Some(&k) = self.by_lead.get(&lead) else { break };
            let row = &self.rows[k];
            let b = row.main[0].1;
            match self.field {
                Field::Prime(p) => {
                    // pivots are normalised to leading coefficient 1
                    let f = (p - a) % p;
                    main = combine(self.field, 1, &main, f, &row.main)?;
                    if self.track {
                        tag = combine(self.field, 1, &tag, f, &row.tag)?;
                    }
                }
                Field::Rational => {
                    let g = gcd(a, b);
                    let (fa, fb) = (b / g, -(a / g));
                    main = combine(self.field, fa, &main, fb, &row.main)?;
                    if self.track {
                        tag = combine(self.field, fa, &tag, fb, &row.tag)?;
                    }
                    normalize_content(&mut main, &mut tag);
                }
            }
        }
        Ok((main, tag))
    }

    /// Adds `v` (labelled `id`). Returns the dependency relation among inputs
    /// when `v` is already in the span.
    pub(crate) fn insert(&mut self, v: &[(usize, i64)], id: usize) -> Result<Option<Vec128>> {
        let (mut main, mut tag) = self.reduce(v, id)?;
        if main.is_empty() {
            return Ok(Some(tag));
        }
        match self.field {
            Field::Prime(p) => {
                let inv = inv_mod(main[0].1, p);
                for e in main.iter_mut().chain(tag.iter_mut()) {
                    e.1 = (e.1 * inv).rem_euclid(p);
                }
            }
            Field::Rational => normalize_content(&mut main, &mut tag),
        }
        self.by_lead.insert(main[0].0, self.rows.len());
        self.rows.push(Row { main, tag });
        Ok(None)
    }
}

fn normalize_content(main: &mut Vec128, tag: &mut Vec128) {
    let mut g = 0i128;
    for e in main.iter().chain(tag.iter()) {
        g = gcd(g, e.1);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for e in main.iter_mut().chain(tag.iter_mut()) {
            e.1 /= g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2i128, 3, 5, 7, 101] {
            for a in 1..p {
                assert_eq!((a * inv_mod(a, p)) % p, 1);
            }
        }
    }

    #[test]
    fn tags_track_combinations() {
        let mut e = Echelon::new(Field::Rational, 3, true);
        assert!(e.insert(&[(0, 2), (1, 3)], 0).unwrap().is_none());
        assert!(e.insert(&[(0, 3), (2, 1)], 1).unwrap().is_none());
        // 3·col0 − 2·col1 = (0, 9, −2); so 3·c0 − 2·c1 − c2 = 0
        let rel = e.insert(&[(1, 9), (2, -2)], 2).unwrap().unwrap();
        let g = rel.iter().find(|x| x.0 == 2).unwrap().1;
        let scaled: Vec<_> = rel.iter().map(|&(i, v)| (i, v * -1 / g)).collect();
        assert_eq!(scaled, vec![(0, 3), (1, -2), (2, -1)]);
    }
}
