//! Buchberger's algorithm over the rationals.
//!
//! Internally polynomials carry primitive integer coefficients; reductions are
//! fraction-free and the content is stripped after every reduction. Pairs are
//! chosen by the sugar variant of the normal strategy (smallest sugar degree,
//! then smallest lcm) and pruned with the Gebauer–Möller update, which
//! implements both of Buchberger's criteria.

use std::cmp::Ordering;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{BudgetKind, Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// Resource limits for Gröbner computations. The deadline is fixed when the
/// budget is created, so one budget bounds a whole pipeline.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_pair_reductions: u64,
    timeout: Option<Duration>,
    deadline: Option<Instant>,
}

impl Budget {
    pub const DEFAULT_PAIR_REDUCTIONS: u64 = 1_000_000;
    pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(600);

    pub fn new(max_pair_reductions: u64, timeout: Option<Duration>) -> Self {
        Budget {
            max_pair_reductions,
            timeout,
            deadline: timeout.map(|t| Instant::now() + t),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX, None)
    }

    fn check_time(&self) -> Result<()> {
        match (self.deadline, self.timeout) {
            (Some(d), Some(limit)) if Instant::now() > d => Err(Error::Budget(BudgetKind::Timeout { limit })),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_PAIR_REDUCTIONS, Some(Self::DEFAULT_TIMEOUT))
    }
}

/// Reduced Gröbner basis: monic elements sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Wraps elements already known to form a reduced basis under `order`.
    pub(crate) fn from_reduced_parts(ring: Ring, order: MonomialOrder, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring, order, elements }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("basis elements are nonzero"))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Finite generator list with a lazily computed reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            cache: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::from_basis(GroebnerBasis {
            ring: ring.clone(),
            order: MonomialOrder::GrevLex,
            elements: vec![Polynomial::one(ring)],
        })
    }

    /// Ideal generated by a basis, with the basis cached.
    pub fn from_basis(gb: GroebnerBasis) -> Self {
        let cache = OnceLock::new();
        let generators = gb.elements.clone();
        let ring = gb.ring.clone();
        let _ = cache.set(gb);
        Ideal { ring, generators, cache }
    }

    pub fn parse(ring: &Ring, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Polynomial::parse(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis under `ord`; the first basis computed is cached.
    pub fn groebner(&self, ord: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
        if let Some(gb) = self.cache.get() {
            if gb.order == *ord {
                return Ok(gb.clone());
            }
        }
        let gb = groebner_basis(&self.generators, &self.ring, ord, budget)?;
        let _ = self.cache.set(gb.clone());
        Ok(gb)
    }

    /// Reduced grevlex basis.
    pub fn basis(&self, budget: &Budget) -> Result<GroebnerBasis> {
        self.groebner(&MonomialOrder::GrevLex, budget)
    }

    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        ideal_membership(f, self, budget)
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        Ok(self.basis(budget)?.is_unit())
    }

    /// Ideal equality via reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.basis(budget)?.elements == other.basis(budget)?.elements)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let gb = other.basis(budget)?;
        for g in &self.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every generator is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

// ---------------------------------------------------------------------------
// integer working representation

#[derive(Clone, Debug)]
struct WorkPoly {
    /// sorted by decreasing order
    terms: Vec<(Monomial, BigInt)>,
}

impl WorkPoly {
    fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> WorkPoly {
        let mut terms = p.primitive_integer_coefficients();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut w = WorkPoly { terms };
        w.normalize_sign();
        w
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn normalize_sign(&mut self) {
        if !self.terms.is_empty() && self.terms[0].1.is_negative() {
            for (_, c) in &mut self.terms {
                *c = -&*c;
            }
        }
    }

    fn make_primitive(&mut self) {
        let g = self.content();
        if !g.is_zero() && !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        self.normalize_sign();
    }

    fn to_polynomial(&self, ring: &Ring) -> Polynomial {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) / &lc)),
        )
    }
}

/// `a*f[skip..] - b*shift*g[skip_g..]`, merged in order.
fn combine(
    f: &[(Monomial, BigInt)],
    a: &BigInt,
    g: &[(Monomial, BigInt)],
    shift: &Monomial,
    b: &BigInt,
    ord: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut gi = g.iter().map(|(m, c)| (m.mul(shift), c)).peekable();
    let mut fi = f.iter().peekable();
    loop {
        match (fi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => {
                let (m, c) = fi.next().unwrap();
                out.push((m.clone(), c * a));
            }
            (None, Some(_)) => {
                let (m, c) = gi.next().unwrap();
                out.push((m, -(c * b)));
            }
            (Some((mf, _)), Some((mg, _))) => match ord.cmp(mf, mg) {
                Ordering::Greater => {
                    let (m, c) = fi.next().unwrap();
                    out.push((m.clone(), c * a));
                }
                Ordering::Less => {
                    let (m, c) = gi.next().unwrap();
                    out.push((m, -(c * b)));
                }
                Ordering::Equal => {
                    let (m, cf) = fi.next().unwrap();
                    let (_, cg) = gi.next().unwrap();
                    let c = cf * a - cg * b;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            },
        }
    }
    out
}

struct Divisor<'a> {
    poly: &'a WorkPoly,
    mask: u64,
    sugar: u64,
}

fn find_divisor<'a, 'b>(m: &Monomial, divisors: &'b [Divisor<'a>]) -> Option<&'b Divisor<'a>> {
    let mask = m.support_mask();
    divisors
        .iter()
        .find(|d| d.mask & !mask == 0 && d.poly.lm().divides(m))
}

struct Reduced {
    poly: WorkPoly,
    /// `s` with `s*f - poly ∈ ⟨divisors⟩`
    scale: Rational,
    sugar: u64,
}

/// Fully reduces `f` by `divisors`, tracking the sugar degree.
fn reduce(
    f: WorkPoly,
    sugar: u64,
    divisors: &[Divisor<'_>],
    ord: &MonomialOrder,
    budget: Option<&Budget>,
) -> Result<Reduced> {
    let mut rest = std::collections::VecDeque::from(f.terms);
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut scale = Rational::one();
    let mut sugar = sugar;
    let mut steps = 0usize;
    while let Some((m, c)) = rest.front() {
        match find_divisor(m, divisors) {
            None => done.push(rest.pop_front().unwrap()),
            Some(d) => {
                let g = d.poly;
                let shift = m.div(g.lm()).expect("divisor divides");
                sugar = sugar.max(shift.degree() + d.sugar);
                let gcd = c.gcd(g.lc());
                let a = g.lc() / &gcd;
                let b = c / &gcd;
                rest.pop_front();
                rest = combine(rest.make_contiguous(), &a, &g.terms[1..], &shift, &b, ord).into();
                if !a.is_one() {
                    for (_, k) in &mut done {
                        *k *= &a;
                    }
                    scale *= Rational::from_integer(a.clone());
                }
                steps += 1;
                if steps % 8 == 0 {
                    let content = done
                        .iter()
                        .chain(rest.iter())
                        .fold(BigInt::zero(), |acc, (_, k)| if acc.is_one() { acc } else { acc.gcd(k) });
                    if !content.is_zero() && !content.is_one() {
                        for (_, k) in done.iter_mut().chain(rest.iter_mut()) {
                            *k = &*k / &content;
                        }
                        scale /= Rational::from_integer(content);
                    }
                }
                if steps % 256 == 0 {
                    if let Some(b) = budget {
                        b.check_time()?;
                    }
                }
            }
        }
    }
    Ok(Reduced {
        poly: WorkPoly { terms: done },
        scale,
        sugar,
    })
}

/// Multivariate division remainder of `f` by `divisors` under `ord`.
///
/// The divisors are tried in list order at every step; every term of the
/// result is irreducible by every divisor's leading monomial.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    if divisors.iter().any(|g| g.ring() != f.ring()) {
        return Err(Error::RingMismatch);
    }
    if divisors.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_zero() {
        return Ok(f.clone());
    }
    // keep the exact rational scale of f
    let ints = f.primitive_integer_coefficients();
    let f_scale = f.terms()[0].1.clone() / Rational::from_integer(ints[0].1.clone());
    let mut start = WorkPoly { terms: ints };
    start.terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    let work: Vec<WorkPoly> = divisors.iter().map(|g| WorkPoly::from_poly(g, ord)).collect();
    let divs: Vec<Divisor<'_>> = work
        .iter()
        .map(|p| Divisor {
            poly: p,
            mask: p.lm().support_mask(),
            sugar: 0,
        })
        .collect();
    let r = reduce(start, 0, &divs, ord, None)?;
    let factor = f_scale / r.scale;
    Ok(Polynomial::from_terms(
        f.ring(),
        r.poly
            .terms
            .into_iter()
            .map(|(m, c)| (m, Rational::from_integer(c) * &factor)),
    ))
}

/// S-polynomial `(L/lt(f))·f − (L/lt(g))·g`, with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let (mf, cf) = f.leading_term(ord)?;
    let (mg, cg) = g.leading_term(ord)?;
    let l = mf.lcm(&mg);
    let a = f.mul_monomial(&l.div(&mf).unwrap(), &cf.recip());
    let b = g.mul_monomial(&l.div(&mg).unwrap(), &cg.recip());
    a.checked_sub(&b)
}

/// Critical-pair selection. Both give the same reduced basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    /// Smallest sugar degree first. Much less coefficient swell on
    /// non-homogeneous input under elimination orders.
    #[default]
    Sugar,
    /// Smallest lcm degree first.
    Normal,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct Engine<'a> {
    ord: &'a MonomialOrder,
    selection: Selection,
    budget: &'a Budget,
    polys: Vec<WorkPoly>,
    sugars: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    reductions: u64,
}

enum Step {
    Continue,
    Unit,
}

impl Engine<'_> {
    fn reduce_by_active(&self, f: WorkPoly, sugar: u64) -> Result<(WorkPoly, u64)> {
        let divs: Vec<Divisor<'_>> = self
            .active
            .iter()
            .map(|&k| Divisor {
                poly: &self.polys[k],
                mask: self.polys[k].lm().support_mask(),
                sugar: self.sugars[k],
            })
            .collect();
        let mut r = reduce(f, sugar, &divs, self.ord, Some(self.budget))?;
        r.poly.make_primitive();
        Ok((r.poly, r.sugar))
    }

    fn spoly(&self, p: &Pair) -> WorkPoly {
        let f = &self.polys[p.i];
        let g = &self.polys[p.j];
        let sf = p.lcm.div(f.lm()).unwrap();
        let sg = p.lcm.div(g.lm()).unwrap();
        let gcd = f.lc().gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = f.lc() / &gcd;
        let fshift: Vec<(Monomial, BigInt)> = f.terms[1..].iter().map(|(m, c)| (m.mul(&sf), c.clone())).collect();
        WorkPoly {
            terms: combine(&fshift, &a, &g.terms[1..], &sg, &b, self.ord),
        }
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.polys[i].lm().lcm(self.polys[j].lm());
        let sugar = |k: usize| self.sugars[k] + lcm.degree() - self.polys[k].lm().degree();
        Pair {
            i,
            j,
            sugar: sugar(i).max(sugar(j)),
            lcm,
        }
    }

    /// Gebauer–Möller update with the new polynomial at index `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let mut cands: Vec<Pair> = self.active.iter().map(|&g| self.pair(g, h)).collect();
        let coprime = |p: &Pair, polys: &[WorkPoly]| polys[p.i].lm().is_coprime(polys[p.j].lm());

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while !cands.is_empty() {
            let p = cands.remove(0);
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime(&p, &self.polys) || !dominated {
                kept.push(p);
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !coprime(p, &self.polys)).collect();

        // chain criterion on the old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && polys[p.i].lm().lcm(&lm_h) != p.lcm
                && polys[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn add(&mut self, f: WorkPoly, sugar: u64) -> Result<Step> {
        let (r, sugar) = self.reduce_by_active(f, sugar)?;
        if r.is_zero() {
            return Ok(Step::Continue);
        }
        if r.lm().is_one() {
            return Ok(Step::Unit);
        }
        self.polys.push(r);
        self.sugars.push(sugar);
        let h = self.polys.len() - 1;
        self.update(h);
        Ok(Step::Continue)
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let key = |p: &Pair| match self.selection {
                Selection::Sugar => p.sugar,
                Selection::Normal => p.lcm.degree(),
            };
            let better = match key(a).cmp(&key(b)) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match self.ord.cmp(&a.lcm, &b.lcm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (a.j, a.i) < (b.j, b.i),
                },
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<Step> {
        while let Some(p) = self.select_pair() {
            self.reductions += 1;
            if self.reductions > self.budget.max_pair_reductions {
                return Err(Error::Budget(BudgetKind::PairReductions {
                    limit: self.budget.max_pair_reductions,
                }));
            }
            if self.reductions % 8 == 0 {
                self.budget.check_time()?;
            }
            let s = self.spoly(&p);
            if s.is_zero() {
                continue;
            }
            if let Step::Unit = self.add(s, p.sugar)? {
                return Ok(Step::Unit);
            }
        }
        Ok(Step::Continue)
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn groebner_basis(
    generators: &[Polynomial],
    ring: &Ring,
    ord: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    groebner_basis_with(generators, ring, ord, Selection::default(), budget)
}

pub fn groebner_basis_with(
    generators: &[Polynomial],
    ring: &Ring,
    ord: &MonomialOrder,
    selection: Selection,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    if generators.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let unit = || GroebnerBasis {
        ring: ring.clone(),
        order: ord.clone(),
        elements: vec![Polynomial::one(ring)],
    };
    budget.check_time()?;
    let mut inputs: Vec<WorkPoly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| WorkPoly::from_poly(g, ord))
        .collect();
    if inputs.iter().any(|w| w.lm().is_one()) {
        return Ok(unit());
    }
    // smallest leading monomials first
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut engine = Engine {
        ord,
        selection,
        budget,
        polys: Vec::new(),
        sugars: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        reductions: 0,
    };
    for f in inputs {
        let sugar = f.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        if let Step::Unit = engine.add(f, sugar)? {
            return Ok(unit());
        }
    }
    if let Step::Unit = engine.run()? {
        return Ok(unit());
    }

    // minimal basis, then interreduce with leading terms fixed
    let mut minimal: Vec<WorkPoly> = engine.active.iter().map(|&k| engine.polys[k].clone()).collect();
    minimal.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let polys: Vec<Polynomial> = minimal.iter().map(|w| w.to_polynomial(ring)).collect();
    let mut elements = Vec::with_capacity(polys.len());
    for k in 0..polys.len() {
        let lead = polys[k].leading_term(ord)?;
        let tail = polys[k].checked_sub(&Polynomial::monomial(ring, lead.0.clone(), lead.1.clone()))?;
        let others: Vec<Polynomial> = polys
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p.clone())
            .collect();
        let tail_nf = normal_form(&tail, &others, ord)?;
        let full = Polynomial::monomial(ring, lead.0, lead.1).checked_add(&tail_nf)?;
        elements.push(full.monic(ord)?);
    }
    elements.sort_by(|a, b| {
        ord.cmp(
            &b.leading_monomial(ord).unwrap(),
            &a.leading_monomial(ord).unwrap(),
        )
    });
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: ord.clone(),
        elements,
    })
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    ideal.basis(budget)?.contains(f)
}
