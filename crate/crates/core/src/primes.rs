//! The prime-divisor multifunction `n ↦ {p prime | p divides n}` on a finite
//! window `{2, …, N}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multifunction::MultiFunction;
use crate::vertex_set::{VertexSet, VertexUniverse};

/// Largest bound accepted by [`windowed_graph`].
pub const GRAPH_WINDOW_CAP: u64 = 2000;

/// Largest bound accepted by [`PrimeWindow::new`].
pub const WINDOW_CAP: u64 = 10_000_000;

/// The numbers `2..=bound` with a smallest-prime-factor sieve.
#[derive(Debug, Clone)]
pub struct PrimeWindow {
    bound: u64,
    spf: Vec<u32>,
    primes: Vec<u64>,
}

impl PrimeWindow {
    pub fn new(bound: u64) -> Result<Self> {
        if bound < 2 {
            return Err(Error::WindowTooSmall(bound));
        }
        if bound > WINDOW_CAP {
            return Err(Error::CapExceeded {
                what: "prime window",
                requested: usize::try_from(bound).unwrap_or(usize::MAX),
                cap: WINDOW_CAP as usize,
            });
        }
        let len = usize::try_from(bound).expect("window bound fits in memory") + 1;
        let mut spf = vec![0u32; len];
        let mut primes = Vec::new();
        for i in 2..len {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
                let mut j = i.saturating_mul(i);
                while j < len {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Ok(Self { bound, spf, primes })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, n: u64) -> bool {
        (2..=self.bound).contains(&n)
    }

    pub fn numbers(&self) -> std::ops::RangeInclusive<u64> {
        2..=self.bound
    }

    /// Primes in the window, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_prime(&self, n: u64) -> bool {
        if self.contains(n) {
            self.spf[n as usize] as u64 == n
        } else {
            is_prime(n)
        }
    }

    /// Prime divisors of an in-window number via the sieve.
    fn divisors_of(&self, mut n: u64) -> impl Iterator<Item = u64> {
        let mut out = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        out.into_iter()
    }
}

/// Trial-division primality.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Prime(n)`; `Prime(1) = ∅`.
pub fn prime_divisors(n: i64) -> Result<BTreeSet<u64>> {
    Ok(factor_exponents(n)?.support().collect())
}

/// Prime exponents `λⁿ` of a positive integer.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExponentVector(pub BTreeMap<u64, u32>);

impl ExponentVector {
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.keys().copied()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.0.get(&p).copied().unwrap_or(0)
    }

    /// `Π p^{λ_p}`; `None` on overflow.
    pub fn reconstruct(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(1u64, |acc, (&p, &e)| acc.checked_mul(p.checked_pow(e)?))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Unique factorization by trial division.
pub fn factor_exponents(n: i64) -> Result<ExponentVector> {
    if n <= 0 {
        return Err(Error::Domain(n));
    }
    let mut n = n as u64;
    let mut out = BTreeMap::new();
    let mut d = 2u64;
    while d * d <= n {
        while n.is_multiple_of(d) {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    Ok(ExponentVector(out))
}

/// A possibly infinite set of naturals given by a finite description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetDescription {
    Finite(BTreeSet<u64>),
    /// Every natural except the listed ones.
    Cofinite(BTreeSet<u64>),
    Evens,
    Odds,
    AllPrimes,
    /// Every prime except the listed numbers.
    AllPrimesMinus(BTreeSet<u64>),
    AllNaturals,
}

impl SetDescription {
    pub fn contains(&self, n: u64) -> bool {
        match self {
            SetDescription::Finite(s) => s.contains(&n),
            SetDescription::Cofinite(s) => !s.contains(&n),
            SetDescription::Evens => n.is_multiple_of(2),
            SetDescription::Odds => n % 2 == 1,
            SetDescription::AllPrimes => is_prime(n),
            SetDescription::AllPrimesMinus(s) => is_prime(n) && !s.contains(&n),
            SetDescription::AllNaturals => true,
        }
    }
}

fn parse_list(text: &str) -> Result<BTreeSet<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::UndecidableDescription(text.to_string())))
        .collect()
}

/// Accepts `evens`, `odds`, `primes`, `naturals`, `primes-minus:LIST`,
/// `cofinite:LIST`, `finite:LIST` or a bare comma-separated `LIST`.
impl FromStr for SetDescription {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let described = match s {
            "evens" => SetDescription::Evens,
            "odds" => SetDescription::Odds,
            "primes" => SetDescription::AllPrimes,
            "naturals" => SetDescription::AllNaturals,
            _ => match s.split_once(':') {
                Some(("primes-minus", rest)) => SetDescription::AllPrimesMinus(parse_list(rest)?),
                Some(("cofinite", rest)) => SetDescription::Cofinite(parse_list(rest)?),
                Some(("finite", rest)) => SetDescription::Finite(parse_list(rest)?),
                Some(_) => return Err(Error::UndecidableDescription(s.to_string())),
                None => SetDescription::Finite(parse_list(s)?),
            },
        };
        Ok(described)
    }
}

/// `Prime_+(U)` within the window: numbers whose prime divisors all lie in `U`.
pub fn prime_plus(u: &SetDescription, w: &PrimeWindow) -> Vec<u64> {
    w.numbers().filter(|&n| w.divisors_of(n).all(|p| u.contains(p))).collect()
}

/// `Prime_−(U)` within the window: numbers with some prime divisor in `U`.
pub fn prime_minus(u: &SetDescription, w: &PrimeWindow) -> Vec<u64> {
    w.numbers().filter(|&n| w.divisors_of(n).any(|p| u.contains(p))).collect()
}

/// Powers `p^m`, `m ≥ 1`, inside the window.
pub fn prime_leaf(p: u64, w: &PrimeWindow) -> Result<Vec<u64>> {
    if !w.is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut out = Vec::new();
    let mut q = p;
    while q <= w.bound() {
        out.push(q);
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    Ok(out)
}

/// Whether `U` belongs to the `ℵ₀`-wall of the prime-divisor multifunction.
///
/// Membership holds exactly when `U` contains every prime: a missing prime
/// `p` leaves all multiples of `p` outside `Prime_+(U)`, infinitely many,
/// while a `U` containing all primes has `Prime_+(U)` equal to everything.
pub fn wall_aleph0_contains(u: &SetDescription) -> bool {
    match u {
        SetDescription::Finite(_) | SetDescription::Evens | SetDescription::Odds => false,
        SetDescription::Cofinite(excluded) | SetDescription::AllPrimesMinus(excluded) => {
            !excluded.iter().any(|&n| is_prime(n))
        }
        SetDescription::AllPrimes | SetDescription::AllNaturals => true,
    }
}

/// Number represented by vertex `v` of [`windowed_graph`].
pub fn vertex_number(v: usize) -> u64 {
    v as u64 + 2
}

/// Vertex of number `n` in [`windowed_graph`].
pub fn number_vertex(n: u64) -> usize {
    usize::try_from(n - 2).expect("window numbers fit in usize")
}

/// `(Prime ∪ Prime⁻¹) − {·}` on the window, vertex `v` standing for `v + 2`.
pub fn windowed_graph(w: &PrimeWindow) -> Result<MultiFunction> {
    if w.bound() > GRAPH_WINDOW_CAP {
        return Err(Error::CapExceeded {
            what: "windowed prime graph",
            requested: w.bound() as usize,
            cap: GRAPH_WINDOW_CAP as usize,
        });
    }
    let size = (w.bound() - 1) as usize;
    let universe = VertexUniverse::new(size)?;
    let mut rows = vec![VertexSet::empty(size); size];
    for n in w.numbers() {
        for p in w.divisors_of(n).filter(|&p| p != n) {
            rows[number_vertex(n)].insert(number_vertex(p));
            rows[number_vertex(p)].insert(number_vertex(n));
        }
    }
    MultiFunction::from_rows(&universe, rows)
}

/// Window numbers as a vertex set of [`windowed_graph`].
pub fn window_set(w: &PrimeWindow, numbers: impl IntoIterator<Item = u64>) -> Result<VertexSet> {
    let size = (w.bound() - 1) as usize;
    VertexSet::from_members(size, numbers.into_iter().filter(|&n| w.contains(n)).map(number_vertex))
}
