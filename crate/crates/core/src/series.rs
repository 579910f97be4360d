//! Ehrhart series as exact rational functions, and the structural checks run on them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::counting::CountSequence;
use crate::error::{Error, Result};
use crate::poly::Poly;

pub const DEFAULT_MARGIN: usize = 10;

/// `num / den` with the canonical normalization `den(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Rescales both sides so that `den(0) = 1`; `den(0)` must be nonzero.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::Argument("denominator must have a nonzero constant term".into()));
        }
        let inv = d0.recip();
        Ok(Self { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// First `n` coefficients of the power series.
    pub fn expand(&self, n: usize) -> Vec<BigRational> {
        self.num.series_div(&self.den, n)
    }
}

/// Which bound supplied the candidate denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateRule {
    /// product of `1 - x^den` over all vertices
    VertexProduct,
    /// `(1 - x^L)^(k+1)` with `L` the lcm of vertex denominators
    LcmPower,
}

impl fmt::Display for CandidateRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CandidateRule::VertexProduct => "vertex product",
            CandidateRule::LcmPower => "lcm power",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub poly: Poly,
    pub rule: CandidateRule,
    pub lcm: u64,
}

/// The lower-degree of the two known denominators for the Ehrhart series.
///
/// Both are valid: the vertex product bounds the poles through the vertex
/// cone decomposition, and the lcm power through the quasi-period. On a tie
/// the vertex product is kept.
pub fn candidate_denominator(dens: &[u64], k: usize) -> Result<Candidate> {
    if dens.is_empty() {
        return Err(Error::Argument("no vertex denominators".into()));
    }
    if dens.contains(&0) {
        return Err(Error::Argument("vertex denominators must be positive".into()));
    }
    let product_degree: u128 = dens.iter().map(|&d| u128::from(d)).sum();
    let lcm = dens.iter().fold(1u64, |acc, &d| acc.lcm(&d));
    let power_degree = u128::from(lcm) * (k as u128 + 1);
    let to_usize = |d: u64| {
        usize::try_from(d).map_err(|_| Error::Argument(format!("denominator degree {d} too large")))
    };
    if product_degree <= power_degree {
        let mut poly = Poly::one();
        for &d in dens {
            poly = &poly * &Poly::one_minus_x_pow(to_usize(d)?);
        }
        Ok(Candidate { poly, rule: CandidateRule::VertexProduct, lcm })
    } else {
        let poly = Poly::one_minus_x_pow(to_usize(lcm)?).pow(k + 1);
        Ok(Candidate { poly, rule: CandidateRule::LcmPower, lcm })
    }
}

/// Number of counts [`fit_series`] needs for a denominator of degree `deg_t`.
pub fn counts_needed(deg_t: usize, margin: usize) -> usize {
    deg_t + 1 + margin
}

/// `N = (t * Σ counts[n] x^n)` truncated to degree `deg t`, returned as `N / t`.
///
/// The next `margin` coefficients of the product must vanish and `deg N <
/// deg t`; otherwise `t` is not a denominator of the series.
pub fn fit_series(counts: &CountSequence, t: &Poly, margin: usize) -> Result<RationalFunction> {
    let deg_t = t
        .degree()
        .ok_or_else(|| Error::Argument("zero denominator".into()))?;
    let needed = counts_needed(deg_t, margin);
    if counts.len() < needed {
        return Err(Error::TooFewCounts { needed, have: counts.len() });
    }
    let values: Vec<BigRational> = counts.values()[..needed]
        .iter()
        .map(|v| BigRational::from_integer(BigInt::from(v.clone())))
        .collect();
    let product = &Poly::new(values) * t;
    for d in deg_t..needed {
        let c = product.coeff(d);
        if !c.is_zero() {
            return Err(Error::DenominatorRejected { degree: d, value: c.to_string() });
        }
    }
    RationalFunction::new(product.truncate(deg_t), t.clone())
}

/// Divide out the monic gcd and renormalize `den(0) = 1`.
pub fn reduce_lowest_terms(r: &RationalFunction) -> RationalFunction {
    let g = r.num.gcd(&r.den);
    if g.is_zero() || g.degree() == Some(0) {
        return r.clone();
    }
    let num = r.num.exact_div(&g).expect("gcd divides the numerator");
    let den = r.den.exact_div(&g).expect("gcd divides the denominator");
    RationalFunction::new(num, den).expect("a factor of den(0) != 0 keeps a nonzero constant term")
}

/// `den = (1-x)^mult_1mx * (1+x)^mult_1px * remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorShape {
    pub mult_1mx: usize,
    pub mult_1px: usize,
    pub remainder: Poly,
}

impl DenominatorShape {
    /// Peel `(1-x)` then `(1+x)` to exhaustion.
    pub fn of(q: &Poly) -> Self {
        let (mult_1mx, rest) = q.peel(&Poly::one_minus_x_pow(1));
        let (mult_1px, remainder) = rest.peel(&Poly::one_plus_x());
        Self { mult_1mx, mult_1px, remainder }
    }

    /// Product form: `(1-x)^a(1-x^2)^b` when `a >= b`, else `(1-x)^a(1+x)^b`,
    /// followed by any other remainder.
    pub fn factored(&self) -> String {
        let mut out = String::new();
        let power = |base: &str, e: usize| match e {
            0 => String::new(),
            1 => format!("({base})"),
            _ => format!("({base})^{e}"),
        };
        if self.mult_1mx >= self.mult_1px {
            out += &power("1-x", self.mult_1mx - self.mult_1px);
            out += &power("1-x^2", self.mult_1px);
        } else {
            out += &power("1-x", self.mult_1mx);
            out += &power("1+x", self.mult_1px);
        }
        if !self.remainder.is_one_poly() {
            out += &format!("({})", self.remainder);
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    fn factor_count(&self) -> usize {
        let (a, b) = (self.mult_1mx, self.mult_1px);
        let base = if a >= b {
            usize::from(a > b) + usize::from(b > 0)
        } else {
            usize::from(a > 0) + 1
        };
        base + usize::from(!self.remainder.is_one_poly())
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        *self == Poly::one()
    }
}

/// Shape of `q`, requiring a pole of order exactly `k + 1` at `x = 1`.
pub fn denominator_shape(q: &Poly, k: usize) -> Result<DenominatorShape> {
    if q.coeff(0) != BigRational::one() {
        return Err(Error::Argument("denominator must satisfy q(0) = 1".into()));
    }
    let shape = DenominatorShape::of(q);
    if shape.mult_1mx != k + 1 {
        return Err(Error::PoleOrder { found: shape.mult_1mx, expected: k + 1 });
    }
    Ok(shape)
}

/// `(num)/(den)` with the denominator in product form.
pub fn format_series(r: &RationalFunction) -> String {
    let shape = DenominatorShape::of(r.den());
    let den = shape.factored();
    if shape.factor_count() > 1 {
        format!("({})/({den})", r.num())
    } else {
        format!("({})/{den}", r.num())
    }
}

pub fn is_palindromic(m: &Poly) -> bool {
    m.is_palindromic()
}

/// `x^(s+1) r(x) = (-1)^(k+1) r(1/x)`, checked as a polynomial identity.
///
/// With `r = M/Q` and `P* = x^deg P · P(1/x)`, the identity becomes
/// `x^(s+1) M Q* x^deg M = (-1)^(k+1) M* Q x^deg Q`.
pub fn check_reciprocity(r: &RationalFunction, k: usize, s: usize) -> bool {
    let (m, q) = (r.num(), r.den());
    let (Some(dm), Some(dq)) = (m.degree(), q.degree()) else {
        return false;
    };
    let lhs = (m * &q.reversed()).shift(s + 1 + dm);
    let mut rhs = (&m.reversed() * q).shift(dq);
    if (k + 1) % 2 == 1 {
        rhs = -&rhs;
    }
    lhs == rhs
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Pass(String),
    Fail(String),
    NotApplicable(String),
}

impl Verdict {
    pub fn from_bool(ok: bool, detail: String) -> Self {
        if ok {
            Verdict::Pass(detail)
        } else {
            Verdict::Fail(detail)
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass(_) => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::NotApplicable(_) => "n/a",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            Verdict::Pass(d) | Verdict::Fail(d) | Verdict::NotApplicable(d) => d,
        }
    }
}

/// Checks for a connected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphReport {
    /// `(1+x)`-multiplicity of the lowest-terms denominator.
    pub s: usize,
    /// Numerator over `(1-x)^(k+1) (1+x)^s`, if the denominator has that form.
    pub h: Option<Poly>,
    pub shape_ok: bool,
    pub symmetric: bool,
    /// `s = 0` and `deg H = k - 2`, present for bipartite inputs.
    pub bipartite_ok: Option<bool>,
}

impl GraphReport {
    pub fn verdicts(&self, k: usize) -> Vec<(&'static str, Verdict)> {
        let mut out = Vec::new();
        let deg = self.h.as_ref().and_then(Poly::degree);
        let expected = (k + self.s).checked_sub(2);
        out.push((
            "graph_denominator_shape",
            Verdict::from_bool(
                self.shape_ok,
                if self.shape_ok {
                    format!("(1-x^2)^{}(1-x)^{}", self.s, k + 1 - self.s.min(k + 1))
                } else {
                    "unexpected denominator factor".into()
                },
            ),
        ));
        out.push((
            "graph_symmetric",
            Verdict::from_bool(
                self.symmetric,
                format!(
                    "s={}, deg H={}, expected {}",
                    self.s,
                    fmt_deg(deg),
                    expected.map_or("-".into(), |e| e.to_string())
                ),
            ),
        ));
        out.push((
            "bipartite_degree",
            match self.bipartite_ok {
                None => Verdict::NotApplicable("graph is not bipartite".into()),
                Some(ok) => Verdict::from_bool(
                    ok,
                    format!(
                        "s={}, deg H={}, expected s=0 and {}",
                        self.s,
                        fmt_deg(deg),
                        k.checked_sub(2).map_or("-".into(), |e| e.to_string())
                    ),
                ),
            },
        ));
        out
    }
}

fn fmt_deg(d: Option<usize>) -> String {
    d.map_or_else(|| "-inf".into(), |d| d.to_string())
}

/// `H(x) = x^d H(1/x)` coefficientwise, with coefficients beyond `d` zero.
fn symmetric_of_degree(h: &Poly, d: Option<usize>) -> bool {
    let Some(d) = d else { return false };
    match h.degree() {
        None => false,
        Some(deg) if deg > d => false,
        Some(_) => (0..=d).all(|i| h.coeff(i) == h.coeff(d - i)),
    }
}

/// Graph checks on a lowest-terms series of a connected simple graph on `k` vertices.
pub fn graph_report(r: &RationalFunction, k: usize, bipartite: bool) -> GraphReport {
    let shape = DenominatorShape::of(r.den());
    let s = shape.mult_1px;
    let shape_ok = shape.mult_1mx == k + 1 && shape.remainder == Poly::one();
    let canonical = &Poly::one_minus_x_pow(1).pow(k + 1) * &Poly::one_plus_x().pow(s);
    let h = canonical
        .exact_div(r.den())
        .map(|factor| r.num() * &factor)
        .filter(|_| shape_ok);
    let symmetric = h
        .as_ref()
        .is_some_and(|h| symmetric_of_degree(h, (k + s).checked_sub(2)));
    let bipartite_ok = bipartite.then(|| {
        s == 0
            && h
                .as_ref()
                .is_some_and(|h| h.degree() == k.checked_sub(2) && h.is_palindromic())
    });
    GraphReport { s, h, shape_ok, symmetric, bipartite_ok }
}

/// Checks for a connected simple `s`-uniform hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformReport {
    pub palindromic: bool,
    pub numerator_degree: Option<usize>,
    pub denominator_degree: Option<usize>,
    pub degree_ok: bool,
    /// For unimodular inputs: `den = (1-x)^(k+1)` and `deg M = k - s`.
    pub unimodular_ok: Option<bool>,
}

impl UniformReport {
    pub fn verdicts(&self, k: usize, s: usize) -> Vec<(&'static str, Verdict)> {
        let expected = self
            .denominator_degree
            .and_then(|dq| dq.checked_sub(s + 1));
        vec![
            (
                "uniform_palindromic",
                Verdict::from_bool(
                    self.palindromic && self.degree_ok,
                    format!(
                        "deg M={}, deg Q-(s+1)={}, palindromic={}",
                        fmt_deg(self.numerator_degree),
                        fmt_deg(expected),
                        self.palindromic
                    ),
                ),
            ),
            (
                "uniform_unimodular_degree",
                match self.unimodular_ok {
                    None => Verdict::NotApplicable("not known to be unimodular".into()),
                    Some(ok) => Verdict::from_bool(
                        ok,
                        format!(
                            "deg M={}, expected k-s={} over (1-x)^{}",
                            fmt_deg(self.numerator_degree),
                            k.checked_sub(s).map_or("-".into(), |e| e.to_string()),
                            k + 1
                        ),
                    ),
                },
            ),
        ]
    }
}

pub fn uniform_report(r: &RationalFunction, k: usize, s: usize, unimodular: bool) -> UniformReport {
    let (m, q) = (r.num(), r.den());
    let numerator_degree = m.degree();
    let denominator_degree = q.degree();
    let degree_ok = match (numerator_degree, denominator_degree) {
        (Some(dm), Some(dq)) => dq.checked_sub(s + 1) == Some(dm),
        _ => false,
    };
    let palindromic = !m.is_zero() && m.is_palindromic();
    let unimodular_ok = unimodular.then(|| {
        *q == Poly::one_minus_x_pow(1).pow(k + 1)
            && numerator_degree.is_some()
            && numerator_degree == k.checked_sub(s)
            && palindromic
    });
    UniformReport {
        palindromic,
        numerator_degree,
        denominator_degree,
        degree_ok,
        unimodular_ok,
    }
}

/// Euclidean volume `((1-x)^(k+1) r)(1) / k!`.
pub fn normalized_volume(r: &RationalFunction, k: usize) -> Result<BigRational> {
    let (mult, rest) = r.den().peel(&Poly::one_minus_x_pow(1));
    if mult != k + 1 {
        return Err(Error::PoleOrder { found: mult, expected: k + 1 });
    }
    let one = BigRational::one();
    let at_one = r.num().eval(&one) / rest.eval(&one);
    let factorial = (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    Ok(at_one / BigRational::from_integer(factorial))
}

/// Nonnegative integer coefficients.
pub fn has_nonnegative_integer_coeffs(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && !c.is_negative())
}

/// Compare the power-series expansion against every count.
pub fn reproduces_counts(r: &RationalFunction, counts: &CountSequence) -> bool {
    let expanded = r.expand(counts.len());
    expanded
        .iter()
        .zip(counts.values())
        .all(|(e, c)| e.is_integer() && e.to_integer().to_biguint().as_ref() == Some(c))
}

/// `u64` form of an integral rational, for small exact values.
pub fn rational_to_u64(r: &BigRational) -> Option<u64> {
    r.is_integer().then(|| r.to_integer().to_u64()).flatten()
}
