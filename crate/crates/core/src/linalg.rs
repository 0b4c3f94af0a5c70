//! Exact linear algebra on polynomials: rank, independence and span
//! membership over the rationals.

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::word::{Alphabet, Word};
use crate::Rational;

/// Incrementally maintained reduced row-echelon basis of a span of
/// polynomials.
///
/// Each stored row has a pivot word with coefficient 1 that appears in no
/// other row. Rows also remember how they combine the generators that were
/// accepted, so membership queries return coordinates.
#[derive(Debug, Clone)]
pub struct Span {
    alphabet: Alphabet,
    rows: Vec<Row>,
    generators: usize,
}

#[derive(Debug, Clone)]
struct Row {
    pivot: Word,
    poly: Polynomial,
    combo: Vec<Rational>,
}

/// Outcome of reducing a polynomial against a [`Span`].
#[derive(Debug, Clone)]
pub struct Reduction {
    /// Coordinates with respect to the accepted generators, in insertion
    /// order.
    pub coordinates: Vec<Rational>,
    /// What is left after subtracting the span component; zero iff the
    /// polynomial lies in the span.
    pub residual: Polynomial,
}

impl Span {
    pub fn new(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            rows: Vec::new(),
            generators: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `p` if it is independent of the current span; returns whether
    /// it was accepted.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let red = self.reduce(p);
        if red.residual.is_zero() {
            return false;
        }
        let idx = self.generators;
        self.generators += 1;
        for row in &mut self.rows {
            row.combo.push(Rational::zero());
        }
        // residual = p - sum coords_i g_i
        let mut combo: Vec<Rational> = red.coordinates.iter().map(|c| -c).collect();
        combo.push(Rational::one());

        let (pivot, lead) = {
            let (w, c) = red.residual.terms().next().expect("non-zero residual");
            (w.clone(), c.clone())
        };
        let inv = Rational::one() / lead;
        let poly = red.residual.scale(&inv);
        let combo: Vec<Rational> = combo.iter().map(|c| c * &inv).collect();

        for row in &mut self.rows {
            let c = row.poly.coefficient(&pivot);
            if c.is_zero() {
                continue;
            }
            row.poly = &row.poly - &poly.scale(&c);
            for (a, b) in row.combo.iter_mut().zip(&combo) {
                *a -= &c * b;
            }
        }
        debug_assert_eq!(combo.len(), idx + 1);
        self.rows.push(Row { pivot, poly, combo });
        true
    }

    /// Expresses `p` as a combination of accepted generators plus a residual.
    pub fn reduce(&self, p: &Polynomial) -> Reduction {
        let mut residual = p.clone();
        let mut coordinates = vec![Rational::zero(); self.generators];
        for row in &self.rows {
            let c = residual.coefficient(&row.pivot);
            if c.is_zero() {
                continue;
            }
            residual = &residual - &row.poly.scale(&c);
            for (a, b) in coordinates.iter_mut().zip(&row.combo) {
                *a += &c * b;
            }
        }
        Reduction {
            coordinates,
            residual,
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).residual.is_zero()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }
}

/// Exact rank of a family of polynomials.
pub fn rank(polys: &[Polynomial]) -> usize {
    let Some(first) = polys.first() else {
        return 0;
    };
    let mut span = Span::new(first.alphabet());
    polys.iter().filter(|p| span.insert(p)).count()
}

/// Whether the family is linearly independent.
pub fn is_independent(polys: &[Polynomial]) -> bool {
    rank(polys) == polys.len()
}

/// Coordinates of `target` in the span of `basis` if it lies there.
/// `basis` must be independent.
pub fn solve_in_span(basis: &[Polynomial], target: &Polynomial) -> Option<Vec<Rational>> {
    let mut span = Span::new(target.alphabet());
    for b in basis {
        if !span.insert(b) {
            return None;
        }
    }
    let red = span.reduce(target);
    red.residual.is_zero().then_some(red.coordinates)
}

/// Whether the two families span the same subspace.
pub fn same_span(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let ra = rank(a);
    if ra != rank(b) {
        return false;
    }
    let mut joined = a.to_vec();
    joined.extend_from_slice(b);
    rank(&joined) == ra
}
