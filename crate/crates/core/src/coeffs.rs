//! Exact coefficient arithmetic: sparse multivariate polynomials over
//! arbitrary-precision rationals, fractions of those, and a quadratic
//! extension by a formal square root of the rescaling constant.
//!
//! Three variable sets are supported: the `u`-field `(u, a, b, x, y)` with
//! radical `s`, `s^2 = (a + b - b*u)/(a*u)`; the `v`-field `(v, a, b, x, y)`
//! with radical `r`, `r^2 = (a + b - b*v^2)/a`; and the two-variable
//! `(q, z)` field used by the Hecke oracle, with `s^2 = (z + 1 - q)/(q*z)`.
//!
//! Fractions are deliberately not kept GCD-reduced: only the common monomial
//! factor and the integer content are cancelled, and the denominator's
//! leading coefficient is normalized positive. Equality is decided exactly
//! by cross-multiplication, which needs no multivariate GCD.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("substitution may only bind x or y, not {0}")]
    ForbiddenSubstitution(&'static str),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

/// Which coefficient field a value lives in. All binary operations require
/// both operands tagged identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    /// Variables (u, a, b, x, y), radical s with s^2 = (a + b - b*u)/(a*u).
    T,
    /// Variables (v, a, b, x, y), radical r with r^2 = (a + b - b*v^2)/a.
    V,
    /// Variables (q, z), radical s with s^2 = (z + 1 - q)/(q*z).
    Qz,
}

impl FieldTag {
    pub fn var_names(self) -> [&'static str; 5] {
        match self {
            FieldTag::T => ["u", "a", "b", "x", "y"],
            FieldTag::V => ["v", "a", "b", "x", "y"],
            FieldTag::Qz => ["q", "z", "?", "?", "?"],
        }
    }

    pub fn radical_name(self) -> &'static str {
        match self {
            FieldTag::V => "r",
            _ => "s",
        }
    }

    /// The square of the formal radical.
    pub fn radicand(self) -> PolyFrac {
        let q = MultiPoly::var(self, Var::Q);
        let a = MultiPoly::var(self, Var::A);
        match self {
            FieldTag::T => {
                // (a + b - b*u) / (a*u)
                let b = MultiPoly::var(self, Var::B);
                let num = &(&a + &b) - &(&b * &q);
                PolyFrac::new(num, &a * &q)
            }
            FieldTag::V => {
                // (a + b - b*v^2) / a
                let b = MultiPoly::var(self, Var::B);
                let num = &(&a + &b) - &(&b * &(&q * &q));
                PolyFrac::new(num, a)
            }
            FieldTag::Qz => {
                // (z + 1 - q) / (q*z); the Ocneanu-trace analogue.
                let num = &(&a + &MultiPoly::one(self)) - &q;
                PolyFrac::new(num, &a * &q)
            }
        }
    }

    fn var_by_name(self, name: &str) -> Option<Var> {
        let names = self.var_names();
        Var::ALL.iter().copied().find(|v| names[v.slot()] == name)
    }
}

/// Variable slots. `Q` is the quadratic parameter, rendered `u`, `v` or `q`
/// depending on the field; `A` doubles as the Hecke trace weight `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    A,
    B,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::Q, Var::A, Var::B, Var::X, Var::Y];

    pub fn slot(self) -> usize {
        match self {
            Var::Q => 0,
            Var::A => 1,
            Var::B => 2,
            Var::X => 3,
            Var::Y => 4,
        }
    }
}

/// Exponent vector over the five variable slots.
pub type Mono = [u16; 5];

fn mono_mul(lhs: &Mono, rhs: &Mono) -> Mono {
    let mut out = [0u16; 5];
    for k in 0..5 {
        out[k] = lhs[k].checked_add(rhs[k]).expect("exponent overflow");
    }
    out
}

fn mono_div(lhs: &Mono, rhs: &Mono) -> Option<Mono> {
    let mut out = [0u16; 5];
    for k in 0..5 {
        out[k] = lhs[k].checked_sub(rhs[k])?;
    }
    Some(out)
}

fn mono_degree(m: &Mono) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// Canonical monomial order: total degree first, ties broken so that earlier
/// variable slots come first (ascending lists `1, a, b, b*u, ...`).
fn canon_cmp(lhs: &Mono, rhs: &Mono) -> Ordering {
    mono_degree(lhs)
        .cmp(&mono_degree(rhs))
        .then_with(|| rhs.cmp(lhs))
}

/// Sparse multivariate polynomial with arbitrary-precision rational
/// coefficients. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPoly {
    tag: FieldTag,
    terms: BTreeMap<Mono, BigRational>,
}

impl MultiPoly {
    pub fn zero(tag: FieldTag) -> Self {
        MultiPoly { tag, terms: BTreeMap::new() }
    }

    pub fn constant(tag: FieldTag, c: BigRational) -> Self {
        let mut p = Self::zero(tag);
        if !c.is_zero() {
            p.terms.insert([0; 5], c);
        }
        p
    }

    pub fn int(tag: FieldTag, n: i64) -> Self {
        Self::constant(tag, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn one(tag: FieldTag) -> Self {
        Self::int(tag, 1)
    }

    pub fn var(tag: FieldTag, v: Var) -> Self {
        Self::var_pow(tag, v, 1)
    }

    pub fn var_pow(tag: FieldTag, v: Var, e: u16) -> Self {
        let mut mono = [0u16; 5];
        mono[v.slot()] = e;
        let mut p = Self::zero(tag);
        p.terms.insert(mono, BigRational::one());
        p
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0; 5])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, mono: Mono, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c.clone());
            }
        }
    }

    fn assert_same_tag(&self, other: &Self) {
        assert_eq!(self.tag, other.tag, "mixed coefficient fields");
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.tag);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiply by a single monomial.
    fn mul_mono(&self, mono: &Mono, c: &BigRational) -> Self {
        let mut out = Self::zero(self.tag);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(mono_mul(m, mono), v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.tag);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Leading term under the canonical monomial order.
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(m1, _), (m2, _)| canon_cmp(m1, m2))
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.assert_same_tag(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.tag);
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (*m, c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            let m = mono_div(&rm, &dm)?;
            let c = rc / &dc;
            quot.add_term(m, &c);
            rem = &rem - &divisor.mul_mono(&m, &c);
        }
        Some(quot)
    }

    /// Elementwise minimum of all exponent vectors (the monomial content).
    fn mono_content(&self) -> Mono {
        let mut acc = [u16::MAX; 5];
        for m in self.terms.keys() {
            for k in 0..5 {
                acc[k] = acc[k].min(m[k]);
            }
        }
        if self.terms.is_empty() {
            [0; 5]
        } else {
            acc
        }
    }

    fn div_mono(&self, mono: &Mono) -> Self {
        let mut out = Self::zero(self.tag);
        for (m, c) in &self.terms {
            out.terms
                .insert(mono_div(m, mono).expect("monomial content"), c.clone());
        }
        out
    }

    /// Substitute each variable slot per `bind`, producing a value in
    /// `out_tag`. `None` keeps the slot symbolic (same slot in the target).
    pub fn eval(&self, out_tag: FieldTag, bind: &[Option<QuadExt>; 5]) -> QuadExt {
        let mut acc = QuadExt::zero(out_tag);
        for (mono, c) in &self.terms {
            let mut kept = [0u16; 5];
            let mut factor = QuadExt::from_frac(PolyFrac::from_poly(MultiPoly::constant(
                out_tag,
                c.clone(),
            )));
            for k in 0..5 {
                if mono[k] == 0 {
                    continue;
                }
                match &bind[k] {
                    None => kept[k] = mono[k],
                    Some(val) => factor = &factor * &val.pow(mono[k] as i64),
                }
            }
            if kept != [0u16; 5] {
                let mut m = MultiPoly::zero(out_tag);
                m.terms.insert(kept, BigRational::one());
                factor = &factor * &QuadExt::from_frac(PolyFrac::from_poly(m));
            }
            acc = &acc + &factor;
        }
        acc
    }

    fn render(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut monos: Vec<&Mono> = self.terms.keys().collect();
        monos.sort_by(|a, b| canon_cmp(a, b));
        let names = self.tag.var_names();
        for (idx, mono) in monos.iter().enumerate() {
            let c = &self.terms[*mono];
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for v in Var::ALL {
                let e = mono[v.slot()];
                if e == 1 {
                    factors.push(names[v.slot()].to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[v.slot()], e));
                }
            }
            factors.sort();
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f)
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_tag(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_tag(rhs);
        let mut out = MultiPoly::zero(self.tag);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(mono_mul(m1, m2), &(c1 * c2));
            }
        }
        out
    }
}

/// Quotient of two polynomials. The denominator is nonzero; the pair is
/// normalized (common monomial factor and integer content cancelled,
/// denominator leading coefficient positive) but not GCD-reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyFrac {
    num: MultiPoly,
    den: MultiPoly,
}

impl PolyFrac {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        num.assert_same_tag(&den);
        assert!(!den.is_zero(), "zero denominator");
        let mut frac = PolyFrac { num, den };
        frac.normalize();
        frac
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let den = MultiPoly::one(num.tag);
        Self::new(num, den)
    }

    pub fn zero(tag: FieldTag) -> Self {
        Self::from_poly(MultiPoly::zero(tag))
    }

    pub fn one(tag: FieldTag) -> Self {
        Self::from_poly(MultiPoly::one(tag))
    }

    pub fn int(tag: FieldTag, n: i64) -> Self {
        Self::from_poly(MultiPoly::int(tag, n))
    }

    pub fn var(tag: FieldTag, v: Var) -> Self {
        Self::from_poly(MultiPoly::var(tag, v))
    }

    pub fn tag(&self) -> FieldTag {
        self.num.tag
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.tag());
            return;
        }
        // Common monomial factor.
        let gn = self.num.mono_content();
        let gd = self.den.mono_content();
        let mut g = [0u16; 5];
        for k in 0..5 {
            g[k] = gn[k].min(gd[k]);
        }
        if g != [0; 5] {
            self.num = self.num.div_mono(&g);
            self.den = self.den.div_mono(&g);
        }
        // Integer content: make all coefficients integral and coprime.
        let mut denom_lcm = BigInt::one();
        for c in self.num.terms.values().chain(self.den.terms.values()) {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.num.terms.values().chain(self.den.terms.values()) {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        let scale = BigRational::new(denom_lcm, numer_gcd);
        if !scale.is_one() {
            self.num = self.num.mul_scalar(&scale);
            self.den = self.den.mul_scalar(&scale);
        }
        // Positive leading coefficient in the denominator.
        if self
            .den
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        // Cheap reduction when one side exactly divides the other; this is a
        // size-control pass, correctness never depends on it. Monomial
        // denominators are already fully handled by the content pass.
        if self.den.num_terms() > 1 {
            if self.num.num_terms() >= self.den.num_terms() {
                if let Some(q) = self.num.div_exact(&self.den) {
                    self.num = q;
                    self.den = MultiPoly::one(self.tag());
                    return;
                }
            }
            if self.den.num_terms() >= self.num.num_terms() {
                if let Some(q) = self.den.div_exact(&self.num) {
                    self.num = MultiPoly::one(self.tag());
                    self.den = q;
                    if self
                        .den
                        .leading()
                        .map(|(_, c)| c.is_negative())
                        .unwrap_or(false)
                    {
                        self.num = self.num.neg();
                        self.den = self.den.neg();
                    }
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        PolyFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = Self::one(self.tag());
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Exact equality by cross-multiplication.
    pub fn eq_frac(&self, other: &Self) -> bool {
        self.num.assert_same_tag(&other.num);
        &self.num * &other.den == &other.num * &self.den
    }
}

impl std::ops::Add for &PolyFrac {
    type Output = PolyFrac;
    fn add(self, rhs: &PolyFrac) -> PolyFrac {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        PolyFrac::new(num, &self.den * &rhs.den)
    }
}

impl std::ops::Sub for &PolyFrac {
    type Output = PolyFrac;
    fn sub(self, rhs: &PolyFrac) -> PolyFrac {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &PolyFrac {
    type Output = PolyFrac;
    fn mul(self, rhs: &PolyFrac) -> PolyFrac {
        PolyFrac::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Div for &PolyFrac {
    type Output = PolyFrac;
    fn div(self, rhs: &PolyFrac) -> PolyFrac {
        self * &rhs.inv()
    }
}

impl fmt::Display for PolyFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Element `even + odd * s` of the quadratic extension, with `s^2` the
/// field's radicand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadExt {
    even: PolyFrac,
    odd: PolyFrac,
}

impl QuadExt {
    pub fn from_frac(even: PolyFrac) -> Self {
        let odd = PolyFrac::zero(even.tag());
        QuadExt { even, odd }
    }

    pub fn from_parts(even: PolyFrac, odd: PolyFrac) -> Self {
        assert_eq!(even.tag(), odd.tag(), "mixed coefficient fields");
        QuadExt { even, odd }
    }

    pub fn zero(tag: FieldTag) -> Self {
        Self::from_frac(PolyFrac::zero(tag))
    }

    pub fn one(tag: FieldTag) -> Self {
        Self::from_frac(PolyFrac::one(tag))
    }

    pub fn int(tag: FieldTag, n: i64) -> Self {
        Self::from_frac(PolyFrac::int(tag, n))
    }

    pub fn var(tag: FieldTag, v: Var) -> Self {
        Self::from_frac(PolyFrac::var(tag, v))
    }

    /// The formal radical `s` (or `r`).
    pub fn radical(tag: FieldTag) -> Self {
        QuadExt {
            even: PolyFrac::zero(tag),
            odd: PolyFrac::one(tag),
        }
    }

    pub fn tag(&self) -> FieldTag {
        self.even.tag()
    }

    pub fn even(&self) -> &PolyFrac {
        &self.even
    }

    pub fn odd(&self) -> &PolyFrac {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.odd.is_zero() && self.even.is_one()
    }

    pub fn neg(&self) -> Self {
        QuadExt {
            even: self.even.neg(),
            odd: self.odd.neg(),
        }
    }

    /// `(p + q*s)^(-1) = (p - q*s) / (p^2 - q^2*s^2)`; well defined because
    /// the radicand is not a square in the rational-function field.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let rad = self.tag().radicand();
        let norm = &(&self.even * &self.even) - &(&(&self.odd * &self.odd) * &rad);
        assert!(!norm.is_zero(), "norm of nonzero element vanished");
        let ninv = norm.inv();
        QuadExt {
            even: &self.even * &ninv,
            odd: &self.odd.neg() * &ninv,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = Self::one(self.tag());
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Exact equality, componentwise by cross-multiplication.
    pub fn eq_val(&self, other: &Self) -> bool {
        assert_eq!(self.tag(), other.tag(), "mixed coefficient fields");
        self.even.eq_frac(&other.even) && self.odd.eq_frac(&other.odd)
    }

    /// Substitute values for `x` and/or `y`. Binding any other variable
    /// would break the radicand contract and is rejected.
    pub fn subst(&self, bindings: &[(Var, QuadExt)]) -> Result<QuadExt, CoeffError> {
        let mut bind: [Option<QuadExt>; 5] = [None, None, None, None, None];
        for (v, val) in bindings {
            match v {
                Var::X | Var::Y => bind[v.slot()] = Some(val.clone()),
                Var::Q => return Err(CoeffError::ForbiddenSubstitution("u/v/q")),
                Var::A => return Err(CoeffError::ForbiddenSubstitution("a")),
                Var::B => return Err(CoeffError::ForbiddenSubstitution("b")),
            }
        }
        let tag = self.tag();
        let eval_frac = |fr: &PolyFrac| -> QuadExt {
            let n = fr.num().eval(tag, &bind);
            let d = fr.den().eval(tag, &bind);
            &n * &d.inv()
        };
        let even = eval_frac(&self.even);
        let odd = eval_frac(&self.odd);
        Ok(&even + &(&odd * &QuadExt::radical(tag)))
    }

    /// Map into another field by reassigning variable slots; used for the
    /// classical-specialization cross-check. Slots bound `None` stay in the
    /// same slot of the target field.
    pub fn map_field(
        &self,
        out_tag: FieldTag,
        bind: &[Option<QuadExt>; 5],
    ) -> QuadExt {
        let eval_frac = |fr: &PolyFrac| -> QuadExt {
            let n = fr.num().eval(out_tag, bind);
            let d = fr.den().eval(out_tag, bind);
            &n * &d.inv()
        };
        let even = eval_frac(&self.even);
        let odd = eval_frac(&self.odd);
        &even + &(&odd * &QuadExt::radical(out_tag))
    }

    /// Canonical deterministic rendering.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let rad = self.tag().radical_name();
        let odd_str = |odd: &PolyFrac| {
            if odd.is_one() {
                rad.to_string()
            } else if odd.den().is_one() && odd.num().num_terms() == 1 {
                format!("{} * {}", odd, rad)
            } else {
                format!("({}) * {}", odd, rad)
            }
        };
        if self.odd.is_zero() {
            format!("{}", self.even)
        } else if self.even.is_zero() {
            odd_str(&self.odd)
        } else {
            format!("{} + {}", self.even, odd_str(&self.odd))
        }
    }

    /// Parse an expression in the field's variables, `+ - * / ^ ( )`,
    /// integers and the radical symbol. Inverse of [`QuadExt::render`] up to
    /// exact equality.
    pub fn parse(tag: FieldTag, input: &str) -> Result<QuadExt, CoeffError> {
        Parser::new(tag, input).parse_all()
    }
}

impl std::ops::Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        assert_eq!(self.tag(), rhs.tag(), "mixed coefficient fields");
        QuadExt {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl std::ops::Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        assert_eq!(self.tag(), rhs.tag(), "mixed coefficient fields");
        let rad = self.tag().radicand();
        let even = &(&self.even * &rhs.even) + &(&(&self.odd * &rhs.odd) * &rad);
        let odd = &(&self.even * &rhs.odd) + &(&self.odd * &rhs.even);
        QuadExt { even, odd }
    }
}

impl std::ops::Div for &QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self * &rhs.inv()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tag: FieldTag,
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(tag: FieldTag, src: &'a str) -> Self {
        Parser {
            tag,
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn err(&self, msg: impl Into<String>) -> CoeffError {
        let mut line = 1;
        let mut col = 1;
        for ch in self.src.chars().take(self.pos) {
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        CoeffError::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn parse_all(&mut self) -> Result<QuadExt, CoeffError> {
        let v = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<QuadExt, CoeffError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QuadExt, CoeffError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                '/' => {
                    self.bump();
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = &acc / &d;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QuadExt, CoeffError> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let neg = if self.peek() == Some('-') {
                self.bump();
                true
            } else {
                false
            };
            let n = self.integer()?;
            let e = if neg { -(n as i64) } else { n as i64 };
            if e < 0 && base.is_zero() {
                return Err(self.err("zero to a negative power"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QuadExt, CoeffError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                match self.bump() {
                    Some(')') => Ok(v),
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QuadExt::int(self.tag, n as i64))
            }
            Some(c) if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&ch) = self.chars.get(self.pos) {
                    if ch.is_alphanumeric() || ch == '_' {
                        name.push(ch);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                if name == self.tag.radical_name() {
                    return Ok(QuadExt::radical(self.tag));
                }
                match self.tag.var_by_name(&name) {
                    Some(v) => Ok(QuadExt::var(self.tag, v)),
                    None => Err(self.err(format!("unknown symbol '{}'", name))),
                }
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<u64, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| self.err("integer out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn t() -> FieldTag {
        FieldTag::T
    }

    fn v(name: Var) -> QuadExt {
        QuadExt::var(t(), name)
    }

    #[test]
    fn add_basics() {
        let a = v(Var::A);
        let b = v(Var::B);
        assert!((&a + &b).eq_val(&QuadExt::parse(t(), "a + b").unwrap()));
        let s = QuadExt::radical(t());
        assert!((&s + &s.neg()).is_zero());
        let x = v(Var::X);
        let y = v(Var::Y);
        assert!((&(&x - &y) + &y).eq_val(&x));
    }

    #[test]
    fn radical_square_is_radicand() {
        let s = QuadExt::radical(t());
        let c = QuadExt::from_frac(t().radicand());
        assert!((&s * &s).eq_val(&c));
        // (1+s)(1-s) = 1 - c
        let one = QuadExt::one(t());
        let lhs = &(&one + &s) * &(&one - &s);
        assert!(lhs.eq_val(&(&one - &c)));
    }

    #[test]
    fn inverse_examples() {
        let one = QuadExt::one(t());
        assert!(one.inv().eq_val(&one));
        let a = v(Var::A);
        assert!((&a * &a.inv()).eq_val(&one));
        let s = QuadExt::radical(t());
        let sinv = s.inv();
        assert!((&s * &sinv).eq_val(&one));
        // inv(s) = (a*u/(a + b - b*u)) * s
        let expected = QuadExt::parse(t(), "(a*u/(a + b - b*u)) * s").unwrap();
        assert!(sinv.eq_val(&expected));
    }

    #[test]
    fn eq_without_gcd() {
        // (a^2 - b^2)/(a + b) equals a - b
        let a = MultiPoly::var(t(), Var::A);
        let b = MultiPoly::var(t(), Var::B);
        let num = &(&a * &a) - &(&b * &b);
        let den = &a + &b;
        let lhs = QuadExt::from_frac(PolyFrac::new(num, den));
        let rhs = QuadExt::parse(t(), "a - b").unwrap();
        assert!(lhs.eq_val(&rhs));
        assert!(!v(Var::A).eq_val(&v(Var::B)));
    }

    #[test]
    fn inv_of_radical_roundtrip() {
        // mul(inv(s), c) reduces to s
        let s = QuadExt::radical(t());
        let c = QuadExt::from_frac(t().radicand());
        assert!((&s.inv() * &c).eq_val(&s));
    }

    #[test]
    fn subst_examples() {
        let x = v(Var::X);
        let y = v(Var::Y);
        let diff = &x - &y;
        let sub = diff.subst(&[(Var::X, y.clone())]).unwrap();
        assert!(sub.is_zero());
        let x2 = &x * &x;
        let four = QuadExt::int(t(), 4);
        assert!(x2
            .subst(&[(Var::X, QuadExt::int(t(), 2))])
            .unwrap()
            .eq_val(&four));
        assert!(x.subst(&[(Var::A, y)]).is_err());
    }

    #[test]
    fn render_anchors() {
        assert_eq!(QuadExt::one(t()).render(), "1");
        assert_eq!(QuadExt::zero(t()).render(), "0");
        let s = QuadExt::radical(t());
        assert_eq!((&s * &s).render(), "(a + b - b*u) / (a*u)");
    }

    #[test]
    fn render_parse_roundtrip_random() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let val = random_quad(&mut rng, 3);
            let text = val.render();
            let back = QuadExt::parse(t(), &text).unwrap();
            assert!(back.eq_val(&val), "roundtrip failed on {}", text);
        }
    }

    fn random_poly(rng: &mut StdRng, terms: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(t());
        for _ in 0..terms {
            let mono = [
                rng.gen_range(0..3u16),
                rng.gen_range(0..3u16),
                rng.gen_range(0..2u16),
                rng.gen_range(0..2u16),
                rng.gen_range(0..2u16),
            ];
            let c = BigRational::from_integer(BigInt::from(rng.gen_range(-4i64..=4)));
            p.add_term(mono, &c);
        }
        p
    }

    fn random_frac(rng: &mut StdRng, terms: usize) -> PolyFrac {
        let num = random_poly(rng, terms);
        let mut den = random_poly(rng, 2);
        if den.is_zero() {
            den = MultiPoly::one(t());
        }
        PolyFrac::new(num, den)
    }

    pub(super) fn random_quad(rng: &mut StdRng, terms: usize) -> QuadExt {
        QuadExt::from_parts(random_frac(rng, terms), random_frac(rng, terms))
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = StdRng::seed_from_u64(23);
        for trial in 0..1000 {
            let a = random_quad(&mut rng, 2);
            let b = random_quad(&mut rng, 2);
            let c = random_quad(&mut rng, 2);
            // associativity and commutativity
            assert!((&(&a + &b) + &c).eq_val(&(&a + &(&b + &c))), "add assoc {trial}");
            assert!((&(&a * &b) * &c).eq_val(&(&a * &(&b * &c))), "mul assoc {trial}");
            assert!((&a * &b).eq_val(&(&b * &a)), "mul comm {trial}");
            // distributivity
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            assert!(lhs.eq_val(&rhs), "distributivity {trial}");
            // inverse law
            if !a.is_zero() {
                assert!((&a * &a.inv()).eq_val(&QuadExt::one(t())), "inverse {trial}");
            }
            // eq is a congruence: a == b implies a*c == b*c
            if a.eq_val(&b) {
                assert!((&a * &c).eq_val(&(&b * &c)));
            }
        }
    }

    #[test]
    fn conjugate_norm_random() {
        // (p + q*s)(p - q*s) = p^2 - q^2*c, expanded both ways
        let mut rng = StdRng::seed_from_u64(31);
        let c = QuadExt::from_frac(t().radicand());
        for _ in 0..100 {
            let p = QuadExt::from_frac(random_frac(&mut rng, 2));
            let q = QuadExt::from_frac(random_frac(&mut rng, 2));
            let s = QuadExt::radical(t());
            let plus = &p + &(&q * &s);
            let minus = &p - &(&q * &s);
            let lhs = &plus * &minus;
            let rhs = &(&p * &p) - &(&(&q * &q) * &c);
            assert!(lhs.eq_val(&rhs));
        }
    }

    #[test]
    fn v_field_radicand() {
        let d = FieldTag::V.radicand();
        // a*d = a + b - b*v^2
        let a = MultiPoly::var(FieldTag::V, Var::A);
        let lhs = &PolyFrac::from_poly(a) * &d;
        let rhs = PolyFrac::from_poly(
            QuadExt::parse(FieldTag::V, "a + b - b*v^2")
                .unwrap()
                .even()
                .num()
                .clone(),
        );
        assert!(lhs.eq_frac(&rhs));
    }
}
