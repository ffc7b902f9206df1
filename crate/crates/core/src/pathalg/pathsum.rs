use super::{Path, Quiver, VertexId};
use crate::error::{Error, Result};

/// A homogeneous element of the path algebra: an integer combination of
/// paths of one common length.
///
/// Terms are kept sorted by path with zero coefficients dropped, so equal
/// sums compare equal. Coefficients are `i64` with checked arithmetic; an
/// overflow panics rather than wrapping.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSum {
    terms: Vec<(Path, i64)>,
}

impl PathSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        PathSum {
            terms: vec![(p, 1)],
        }
    }

    /// Sum of `paths`, each with coefficient 1 (repeats accumulate).
    pub fn from_paths<I: IntoIterator<Item = Path>>(paths: I) -> Result<Self> {
        let terms: Vec<(Path, i64)> = paths.into_iter().map(|p| (p, 1)).collect();
        if let Some((first, _)) = terms.first() {
            if let Some((p, _)) = terms.iter().find(|(p, _)| p.len() != first.len()) {
                return Err(Error::Inhomogeneous(first.len(), p.len()));
            }
        }
        Ok(Self::normalized(terms))
    }

    /// `e_v` for a single vertex.
    pub fn vertex(v: VertexId) -> Self {
        Self::from_path(Path::trivial(v))
    }

    /// The identity `Σ e_v`.
    pub fn identity(q: &Quiver) -> Self {
        Self::normalized(
            (0..q.num_vertices())
                .map(|v| (Path::trivial(v), 1))
                .collect(),
        )
    }

    /// Sorts, merges repeated paths and drops zero coefficients.
    fn normalized(mut terms: Vec<(Path, i64)>) -> Self {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Path, i64)> = Vec::with_capacity(terms.len());
        for (p, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == p => {
                    *acc = acc.checked_add(c).expect("path coefficient overflow")
                }
                _ => {
                    if out.last().is_some_and(|(_, acc)| *acc == 0) {
                        out.pop();
                    }
                    out.push((p, c));
                }
            }
        }
        if out.last().is_some_and(|(_, acc)| *acc == 0) {
            out.pop();
        }
        PathSum { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common path length, `None` for the zero sum.
    pub fn degree(&self) -> Option<usize> {
        self.terms.first().map(|(p, _)| p.len())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &i64)> {
        self.terms.iter().map(|(p, c)| (p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Path> {
        self.terms.iter().map(|(p, _)| p)
    }

    pub fn coefficient(&self, p: &Path) -> i64 {
        self.terms
            .binary_search_by(|(q, _)| q.cmp(p))
            .map_or(0, |i| self.terms[i].1)
    }

    /// Whether every stored coefficient equals 1.
    pub fn has_unit_coefficients(&self) -> bool {
        self.terms.iter().all(|&(_, c)| c == 1)
    }

    pub fn try_add(&self, other: &PathSum) -> Result<PathSum> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::Inhomogeneous(a, b));
            }
        }
        Ok(Self::normalized(
            self.terms.iter().chain(&other.terms).cloned().collect(),
        ))
    }

    pub fn scale(&self, k: i64) -> PathSum {
        if k == 0 {
            return PathSum::zero();
        }
        PathSum {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), mul(*c, k)))
                .collect(),
        }
    }

    /// Bilinear extension of concatenation: `p·q` is "first `p`, then `q`"
    /// and vanishes unless `q` begins where `p` ends.
    pub fn multiply(&self, other: &PathSum) -> PathSum {
        let mut out = Vec::new();
        for (p, c) in &self.terms {
            // paths order by source first, so those leaving `p.target()`
            // form one contiguous run
            let v = p.target();
            let start = other.terms.partition_point(|(q, _)| q.source() < v);
            for (q, d) in other.terms[start..]
                .iter()
                .take_while(|(q, _)| q.source() == v)
            {
                out.push((p.concat(q).expect("run starts at the target"), mul(*c, *d)));
            }
        }
        Self::normalized(out)
    }
}

fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("path coefficient overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_and_edge() -> Quiver {
        let mut q = Quiver::new();
        q.add_vertex("u", None);
        q.add_vertex("v", None);
        q.add_arrow("l", 0, 0, None, None).unwrap();
        q.add_arrow("e", 0, 1, None, None).unwrap();
        q
    }

    #[test]
    fn trivial_paths_are_local_units() {
        let q = loop_and_edge();
        let e = PathSum::from_path(Path::arrow(&q, 1));
        assert_eq!(PathSum::vertex(0).multiply(&e), e);
        assert!(PathSum::vertex(1).multiply(&e).is_zero());
        assert_eq!(e.multiply(&PathSum::vertex(1)), e);
        assert_eq!(PathSum::identity(&q).multiply(&e), e);
    }

    #[test]
    fn concatenation_and_zero_products() {
        let q = loop_and_edge();
        let l = PathSum::from_path(Path::arrow(&q, 0));
        let e = PathSum::from_path(Path::arrow(&q, 1));
        let le = l.multiply(&e);
        assert_eq!(le.degree(), Some(2));
        assert_eq!(le.support().next().unwrap().arrows(), &[0, 1]);
        assert!(e.multiply(&l).is_zero());
    }

    #[test]
    fn cancellation_and_homogeneity() {
        let q = loop_and_edge();
        let l = PathSum::from_path(Path::arrow(&q, 0));
        let minus = l.scale(-1);
        assert!(l.try_add(&minus).unwrap().is_zero());
        assert!(matches!(
            l.try_add(&PathSum::vertex(0)),
            Err(Error::Inhomogeneous(1, 0))
        ));
        let doubled = PathSum::from_paths([Path::arrow(&q, 0), Path::arrow(&q, 0)]).unwrap();
        assert_eq!(doubled.coefficient(&Path::arrow(&q, 0)), 2);
        assert!(!doubled.has_unit_coefficients());
    }
}
