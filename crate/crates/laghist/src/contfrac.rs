//! Exact sparse polynomials in the six counting variables x, y, u, v, z, w0,
//! and the moment sequences of two continued fractions expanded as weighted
//! lattice-path sums: a staircase fraction via Dyck paths and a three-term
//! fraction via Motzkin paths. Brute-force sums over the symmetric group
//! provide an independent value for every moment, which is what the
//! verification suite compares against.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::perm::Permutation;

/// The global variable order. Every exponent vector is indexed by this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    U,
    V,
    Z,
    W0,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::X, Var::Y, Var::U, Var::V, Var::Z, Var::W0];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::U => 2,
            Var::V => 3,
            Var::Z => 4,
            Var::W0 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::U => "u",
            Var::V => "v",
            Var::Z => "z",
            Var::W0 => "w0",
        }
    }
}

/// An exponent vector over the six variables. Ordered by total degree,
/// ties broken so that within a degree x-heavy monomials come first
/// (descending lexicographic on the exponent vector).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    exps: [u32; 6],
}

impl Monomial {
    pub const fn unit() -> Self {
        Monomial { exps: [0; 6] }
    }

    pub fn from_exponents(exps: [u32; 6]) -> Self {
        Monomial { exps }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 6];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> [u32; 6] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with integer coefficients, stored sparsely. Zero
/// coefficients are never kept, so structural equality is polynomial
/// equality, and iteration order is the serialization order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial::unit(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), 1);
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in serialization order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, -c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&m, &coeff) in &self.terms {
            out.add_term(m, coeff * c);
        }
        out
    }

    /// Exchanges the exponents of x and y in every term.
    pub fn swap_xy(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, &c) in &self.terms {
            let mut exps = m.exponents();
            exps.swap(Var::X.index(), Var::Y.index());
            out.add_term(Monomial::from_exponents(exps), c);
        }
        out
    }

    /// Drops every term with a positive exponent in any of the given
    /// variables — substituting zero for them.
    pub fn set_to_zero(&self, vars: &[Var]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, &c) in &self.terms {
            if vars.iter().all(|v| m.exponents()[v.index()] == 0) {
                out.add_term(*m, c);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// One term per line: "coeff * x^a y^b …" with unit exponents bare and
    /// zero exponents omitted; a constant term is the bare coefficient.
    /// The zero polynomial prints as "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}")?;
            let exps = m.exponents();
            if m.degree() > 0 {
                write!(f, " *")?;
                for v in Var::ALL {
                    let e = exps[v.index()];
                    match e {
                        0 => {}
                        1 => write!(f, " {}", v.name())?,
                        _ => write!(f, " {}^{}", v.name(), e)?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.to_string().replace('\n', " + "))
    }
}

/// Coefficient rule α_1, α_2, … for the staircase fraction.
pub struct SSchedule {
    pub alpha: fn(usize) -> MultiPoly,
}

/// Coefficient rules γ_0, γ_1, … and β_1, β_2, … for the three-term
/// fraction.
pub struct JSchedule {
    pub gamma: fn(usize) -> MultiPoly,
    pub beta: fn(usize) -> MultiPoly,
}

fn alpha_xyuv(k: usize) -> MultiPoly {
    assert!(k >= 1, "alpha index starts at 1");
    if k % 2 == 1 {
        let m = k.div_ceil(2);
        MultiPoly::var(Var::X).add(&MultiPoly::var(Var::U).scale(m as i64 - 1))
    } else {
        let m = k / 2;
        MultiPoly::var(Var::Y).add(&MultiPoly::var(Var::V).scale(m as i64 - 1))
    }
}

fn gamma_xyzw0(n: usize) -> MultiPoly {
    if n == 0 {
        MultiPoly::var(Var::X)
            .mul(&MultiPoly::var(Var::Y))
            .mul(&MultiPoly::var(Var::W0))
    } else {
        MultiPoly::var(Var::X)
            .add(&MultiPoly::var(Var::Y))
            .add(&MultiPoly::constant(n as i64 - 1))
            .add(&MultiPoly::var(Var::Z).scale(n as i64))
    }
}

fn beta_xyzw0(n: usize) -> MultiPoly {
    assert!(n >= 1, "beta index starts at 1");
    let shift = n as i64 - 1;
    MultiPoly::var(Var::X)
        .add(&MultiPoly::constant(shift))
        .mul(&MultiPoly::var(Var::Y).add(&MultiPoly::constant(shift)))
        .mul(&MultiPoly::var(Var::Z))
}

impl SSchedule {
    /// α odd: x, x+u, x+2u, …; α even: y, y+v, y+2v, …
    pub fn xyuv() -> Self {
        SSchedule { alpha: alpha_xyuv }
    }
}

impl JSchedule {
    /// γ_0 = xyw0, γ_n = x+y+(n−1)+nz; β_n = (x+n−1)(y+n−1)z.
    pub fn xyzw0() -> Self {
        JSchedule { gamma: gamma_xyzw0, beta: beta_xyzw0 }
    }
}

/// Taylor coefficients μ_0..μ_n of the staircase fraction, computed as
/// weighted Dyck-path sums: a path of 2k steps contributes the product of
/// α_h over its down steps from height h. One forward sweep of the
/// step-height table yields the whole sequence.
pub fn stieltjes_moments(sched: &SSchedule, n_max: usize) -> Vec<MultiPoly> {
    let steps = 2 * n_max;
    // f[h] = total weight of length-j prefixes ending at height h
    let mut f = vec![MultiPoly::zero(); n_max + 1];
    f[0] = MultiPoly::one();
    let mut moments = Vec::with_capacity(n_max + 1);
    moments.push(MultiPoly::one());
    for j in 1..=steps {
        let mut next = vec![MultiPoly::zero(); n_max + 1];
        for h in 0..=n_max {
            if f[h].is_zero() {
                continue;
            }
            if h < n_max {
                next[h + 1] = next[h + 1].add(&f[h]);
            }
            if h >= 1 {
                let weighted = f[h].mul(&(sched.alpha)(h));
                next[h - 1] = next[h - 1].add(&weighted);
            }
        }
        f = next;
        if j % 2 == 0 {
            moments.push(f[0].clone());
        }
    }
    moments
}

/// Taylor coefficients μ_0..μ_n of the three-term fraction, computed as
/// weighted Motzkin-path sums: level steps at height h carry γ_h, down
/// steps from height h carry β_h, up steps carry 1.
pub fn jacobi_moments(sched: &JSchedule, n_max: usize) -> Vec<MultiPoly> {
    let mut f = vec![MultiPoly::zero(); n_max + 1];
    f[0] = MultiPoly::one();
    let mut moments = Vec::with_capacity(n_max + 1);
    moments.push(MultiPoly::one());
    for _ in 1..=n_max {
        let mut next = vec![MultiPoly::zero(); n_max + 1];
        for h in 0..=n_max {
            if f[h].is_zero() {
                continue;
            }
            next[h] = next[h].add(&f[h].mul(&(sched.gamma)(h)));
            if h < n_max {
                next[h + 1] = next[h + 1].add(&f[h]);
            }
            if h >= 1 {
                next[h - 1] = next[h - 1].add(&f[h].mul(&(sched.beta)(h)));
            }
        }
        f = next;
        moments.push(f[0].clone());
    }
    moments
}

/// Which set size fills the x-exponent in the four-variable sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountingStatistic {
    /// Antirecord count.
    Arec,
    /// Cycle count (= number of cycle maxima).
    Cyc,
}

/// The four-variable sum over all permutations of [n]:
/// x^(arec or cyc) · y^erec · u^(n − exc − first) · v^(exc − erec),
/// where erec counts exclusive records and exc counts excedances. The two
/// choices of first exponent are equidistributed, which the moment tests
/// exercise.
pub fn brute_force_mu(n: usize, which: CountingStatistic) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for p in Permutation::all(n) {
        let profile = p.profile();
        let first = match which {
            CountingStatistic::Arec => profile.arecp.len(),
            CountingStatistic::Cyc => profile.cyc.len(),
        };
        let erec = profile.erecp.len();
        let exc = profile.excp.len();
        let u_exp = n
            .checked_sub(exc + first)
            .expect("antirecords/cycle maxima and excedances never overlap");
        let v_exp = exc
            .checked_sub(erec)
            .expect("every exclusive record letter is an excedance letter");
        let mut exps = [0u32; 6];
        exps[Var::X.index()] = first as u32;
        exps[Var::Y.index()] = erec as u32;
        exps[Var::U.index()] = u_exp as u32;
        exps[Var::V.index()] = v_exp as u32;
        out.add_term(Monomial::from_exponents(exps), 1);
    }
    out
}

/// The four-variable sum over all permutations of [n]:
/// x^cyc · y^arec · z^exc · w0^rar.
pub fn brute_force_jacobi(n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for p in Permutation::all(n) {
        let profile = p.profile();
        let mut exps = [0u32; 6];
        exps[Var::X.index()] = profile.cyc.len() as u32;
        exps[Var::Y.index()] = profile.arecp.len() as u32;
        exps[Var::Z.index()] = profile.excp.len() as u32;
        exps[Var::W0.index()] = profile.rar.len() as u32;
        out.add_term(Monomial::from_exponents(exps), 1);
    }
    out
}
