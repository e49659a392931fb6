//! Per-graph collection of exact index values and every bound, tagged with
//! side and applicability.

use serde::Serialize;

use crate::bounds::{self, BoundError, EigenLocalizers, RandicPair};
use crate::graph::{DegreeSequence, Graph};
use crate::indices::IndexValues;
use crate::majorization::{randic_bounds_classical, RandicExtremals};
use crate::scalar::Scalar;
use crate::spectra::{spectrum, Spectrum, SpectrumError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// What a bound is a bound on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Nee,
    Lee,
    Ne,
    Randic,
    Gamma1,
    Gamma2,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Nee => "nee",
            Quantity::Lee => "lee",
            Quantity::Ne => "ne",
            Quantity::Randic => "randic",
            Quantity::Gamma1 => "gamma1",
            Quantity::Gamma2 => "gamma2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry<T> {
    pub name: &'static str,
    pub quantity: Quantity,
    pub side: Side,
    pub value: Option<T>,
    pub applicable: bool,
    /// Value overflowed to `+inf`.
    pub overflow: bool,
    pub reason: Option<String>,
    pub inputs: Vec<(&'static str, T)>,
    pub relative_error: Option<T>,
}

impl<T> BoundEntry<T> {
    /// `quantity.name`, e.g. `nee.alpha_q`.
    pub fn id(&self) -> String {
        format!("{}.{}", self.quantity.as_str(), self.name)
    }
}

/// Exact values the bounds are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExactValues<T> {
    pub indices: IndexValues<T>,
    pub gamma1: T,
    pub gamma2: T,
}

impl<T: Scalar> ExactValues<T> {
    pub fn get(&self, q: Quantity) -> T {
        match q {
            Quantity::Nee => self.indices.nee,
            Quantity::Lee => self.indices.lee,
            Quantity::Ne => self.indices.ne,
            Quantity::Randic => self.indices.randic,
            Quantity::Gamma1 => self.gamma1,
            Quantity::Gamma2 => self.gamma2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T> {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub bipartite: Option<bool>,
    pub degree_sequence: Vec<usize>,
    pub exact: Option<ExactValues<T>>,
    pub localizers: Option<EigenLocalizers<T>>,
    /// Majorization bracket `(L1, U1)` on `R_{-1}`, when the sequence has
    /// pendant form.
    pub randic_bracket: Option<(T, T)>,
    pub entries: Vec<BoundEntry<T>>,
}

/// A bound that lies on the wrong side of its exact value.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T> {
    pub id: String,
    pub side: Side,
    pub value: T,
    pub exact: T,
}

struct Entries<T> {
    list: Vec<BoundEntry<T>>,
}

impl<T: Scalar> Entries<T> {
    fn push(
        &mut self,
        quantity: Quantity,
        side: Side,
        name: &'static str,
        res: Result<T, BoundError>,
        inputs: Vec<(&'static str, T)>,
    ) {
        let (value, reason) = match res {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(e.to_string())),
        };
        self.list.push(BoundEntry {
            name,
            quantity,
            side,
            applicable: value.is_some(),
            overflow: value.is_some_and(|v| v.is_infinite()),
            value,
            reason,
            inputs,
            relative_error: None,
        });
    }

    fn pair(&mut self, quantity: Quantity, name: &'static str, p: RandicPair<T>, inputs: Vec<(&'static str, T)>) {
        self.push(quantity, Side::Lower, name, p.lower, inputs.clone());
        self.push(quantity, Side::Upper, name, p.upper, inputs);
    }
}

fn na<T>(why: &str) -> Result<T, BoundError> {
    Err(BoundError::NotApplicable(why.to_string()))
}

/// Randić-bracket bounds on NEE, lEE and on `R_{-1}` itself.
fn randic_entries<T: Scalar>(
    e: &mut Entries<T>,
    n: usize,
    bipartite: bool,
    ds: &DegreeSequence,
    extremals: &Option<Result<(T, T), String>>,
    exact_randic: Option<T>,
) {
    let (cl, cu) = randic_bounds_classical::<T>(ds);
    let deg_in = vec![("L", cl), ("U", cu)];
    e.push(Quantity::Randic, Side::Lower, "deg", Ok(cl), vec![]);
    e.push(Quantity::Randic, Side::Upper, "deg", Ok(cu), vec![]);
    match extremals {
        Some(Ok((l, u))) => {
            e.push(Quantity::Randic, Side::Lower, "maj", Ok(*l), vec![]);
            e.push(Quantity::Randic, Side::Upper, "maj", Ok(*u), vec![]);
        }
        Some(Err(why)) => {
            e.push(Quantity::Randic, Side::Lower, "maj", na(why), vec![]);
            e.push(Quantity::Randic, Side::Upper, "maj", na(why), vec![]);
        }
        None => {}
    }

    e.pair(Quantity::Nee, "randic_deg", bounds::nee_randic_bounds(n, cl, cu, bipartite), deg_in.clone());
    e.pair(Quantity::Lee, "randic_deg", bounds::lee_randic_bounds(n, cl, cu, bipartite), deg_in);
    match extremals {
        Some(Ok((l, u))) => {
            let inputs = vec![("L1", *l), ("U1", *u)];
            e.pair(Quantity::Nee, "randic_maj", bounds::nee_randic_bounds(n, *l, *u, bipartite), inputs.clone());
            e.pair(Quantity::Lee, "randic_maj", bounds::lee_randic_bounds(n, *l, *u, bipartite), inputs);
        }
        _ => {
            let why = why_of(extremals);
            for q in [Quantity::Nee, Quantity::Lee] {
                e.pair(q, "randic_maj", RandicPair { lower: na(&why), upper: na(&why) }, vec![]);
            }
        }
    }
    if let Some(r) = exact_randic {
        let inputs = vec![("R_-1", r)];
        e.pair(Quantity::Nee, "randic_exact", bounds::nee_randic_bounds(n, r, r, bipartite), inputs.clone());
        e.pair(Quantity::Lee, "randic_exact", bounds::lee_randic_bounds(n, r, r, bipartite), inputs);
    }
}

fn why_of<T>(extremals: &Option<Result<(T, T), String>>) -> String {
    match extremals {
        Some(Err(w)) => w.clone(),
        _ => "no majorization bracket".to_string(),
    }
}

fn extremal_bracket<T: Scalar>(ds: &DegreeSequence) -> Result<(T, T), String> {
    RandicExtremals::compute(ds).map(|r| r.bounds::<T>()).map_err(|e| e.to_string())
}

impl<T: Scalar> BoundReport<T> {
    /// Full report: spectrum, exact indices, localizers and every bound.
    pub fn for_graph(g: &Graph, label: impl Into<String>) -> Result<Self, SpectrumError> {
        let s = spectrum::<T>(g)?;
        Ok(Self::with_spectrum(g, &s, label))
    }

    pub fn with_spectrum(g: &Graph, s: &Spectrum<T>, label: impl Into<String>) -> Self {
        let n = g.order();
        let bip = g.is_bipartite();
        let ds = g.degree_sequence();
        let indices = IndexValues::compute(g, s);
        let clamped = s.clamped();
        let exact = ExactValues { indices, gamma1: clamped[0], gamma2: clamped.get(1).copied().unwrap_or(T::zero()) };
        let loc = EigenLocalizers::<T>::compute(g);
        let q = loc.q.ok_or_else(|| BoundError::NotApplicable("Q unavailable".into()));
        let r = loc.r.ok_or_else(|| BoundError::NotApplicable("R unavailable".into()));
        let sum = indices.edge_inv_deg_sum;
        let two = T::lit(2.0);
        let mut e = Entries { list: Vec::new() };

        e.push(Quantity::Gamma1, Side::Lower, "q", q.clone(), vec![]);
        e.push(Quantity::Gamma2, Side::Lower, "r", r.clone(), vec![]);

        let qr_in = |q: &T, r: &T| vec![("Q", *q), ("R", *r)];
        e.push(Quantity::Nee, Side::Lower, "li", bounds::nee_lower_li(n), vec![]);
        e.push(
            Quantity::Nee,
            Side::Lower,
            "alpha_q",
            q.clone().and_then(|q| bounds::nee_lower_alpha(n, q)),
            q.iter().map(|&q| ("Q", q)).collect(),
        );
        e.push(
            Quantity::Nee,
            Side::Lower,
            "alpha_beta_qr",
            q.clone().and_then(|q| r.clone().and_then(|r| bounds::nee_lower_alpha_beta(n, q, r))),
            q.iter().zip(r.iter()).flat_map(|(q, r)| qr_in(q, r)).collect(),
        );
        e.push(Quantity::Nee, Side::Lower, "bip", bounds::nee_lower_bipartite(n, bip), vec![]);
        e.push(
            Quantity::Nee,
            Side::Lower,
            "bip_r",
            r.clone().and_then(|r| bounds::nee_lower_bipartite_beta(n, r, bip)),
            r.iter().map(|&r| ("R", r)).collect(),
        );

        e.push(
            Quantity::Lee,
            Side::Lower,
            "alpha_q",
            q.clone().and_then(|q| bounds::lee_lower_alpha(n, q)),
            q.iter().map(|&q| ("Q", q)).collect(),
        );
        e.push(
            Quantity::Lee,
            Side::Lower,
            "alpha_beta_qr",
            q.clone().and_then(|q| r.clone().and_then(|r| bounds::lee_lower_alpha_beta(n, q, r))),
            q.iter().zip(r.iter()).flat_map(|(q, r)| qr_in(q, r)).collect(),
        );
        let hak = bounds::lee_hakimi_bounds(n, indices.randic);
        e.push(Quantity::Lee, Side::Lower, "hakimi1", Ok(hak.lower1), vec![]);
        e.push(Quantity::Lee, Side::Lower, "hakimi2", hak.lower2, vec![]);
        e.push(Quantity::Lee, Side::Lower, "hakimi3", hak.lower3, vec![("R_-1", indices.randic)]);
        e.push(Quantity::Lee, Side::Upper, "hakimi4", hak.upper4, vec![("R_-1", indices.randic)]);

        let a = two * sum - T::one();
        let a_bip = two * sum - two;
        let k1 = q.clone().map(|q| (q - T::one()).powi(2));
        let k2 = r.clone().map(|r| (r - T::one()).powi(2));
        e.push(
            Quantity::Ne,
            Side::Upper,
            "k1_q",
            k1.clone().and_then(|k1| bounds::ne_upper_k1(n, a, k1)),
            k1.iter().map(|&k| ("k1", k)).chain([("a", a)]).collect(),
        );
        e.push(
            Quantity::Ne,
            Side::Upper,
            "k1_k2_qr",
            k1.clone().and_then(|k1| k2.clone().and_then(|k2| bounds::ne_upper_k1_k2(n, a, k1, k2))),
            k1.iter().map(|&k| ("k1", k)).chain(k2.iter().map(|&k| ("k2", k))).chain([("a", a)]).collect(),
        );
        e.push(Quantity::Ne, Side::Upper, "bip", bounds::ne_upper_bipartite(n, a_bip, bip), vec![("a", a_bip)]);
        e.push(
            Quantity::Ne,
            Side::Upper,
            "bip_r",
            r.clone().and_then(|r| bounds::ne_upper_bipartite_beta(n, a_bip, r, bip)),
            r.iter().map(|&r| ("R", r)).chain([("a", a_bip)]).collect(),
        );
        e.push(Quantity::Ne, Side::Upper, "cavers1", Ok(bounds::ne_upper_cavers1(n)), vec![]);
        e.push(Quantity::Ne, Side::Upper, "cavers2", Ok(bounds::ne_upper_cavers2(n)), vec![]);

        let bracket = Some(extremal_bracket::<T>(&ds));
        randic_entries(&mut e, n, bip, &ds, &bracket, Some(indices.randic));

        let mut entries = e.list;
        for entry in &mut entries {
            if let Some(v) = entry.value {
                entry.relative_error = Some(bounds::relative_error(v, exact.get(entry.quantity)));
            }
        }
        Self {
            label: label.into(),
            n,
            m: g.size(),
            bipartite: Some(bip),
            degree_sequence: ds.values().to_vec(),
            exact: Some(exact),
            localizers: Some(loc),
            randic_bracket: bracket.and_then(Result::ok),
            entries,
        }
    }

    /// Bounds that follow from the degree sequence alone. Bipartiteness is
    /// not determined by the sequence, so the general forms are used.
    pub fn for_degree_sequence(ds: &DegreeSequence, label: impl Into<String>) -> Self {
        let n = ds.len();
        let mut e = Entries { list: Vec::new() };
        e.push(Quantity::Nee, Side::Lower, "li", bounds::nee_lower_li(n), vec![]);
        let bracket = Some(extremal_bracket::<T>(ds));
        randic_entries(&mut e, n, false, ds, &bracket, None);
        e.push(Quantity::Ne, Side::Upper, "cavers1", Ok(bounds::ne_upper_cavers1(n)), vec![]);
        e.push(Quantity::Ne, Side::Upper, "cavers2", Ok(bounds::ne_upper_cavers2(n)), vec![]);
        Self {
            label: label.into(),
            n,
            m: ds.edge_count(),
            bipartite: None,
            degree_sequence: ds.values().to_vec(),
            exact: None,
            localizers: None,
            randic_bracket: bracket.and_then(Result::ok),
            entries: e.list,
        }
    }

    pub fn entry(&self, quantity: Quantity, side: Side, name: &str) -> Option<&BoundEntry<T>> {
        self.entries.iter().find(|e| e.quantity == quantity && e.side == side && e.name == name)
    }

    /// Value of an applicable bound.
    pub fn value(&self, quantity: Quantity, side: Side, name: &str) -> Option<T> {
        self.entry(quantity, side, name).and_then(|e| e.value)
    }

    /// Applicable bounds on the wrong side of the exact value by more than
    /// `slack`.
    pub fn audit(&self, slack: T) -> Vec<Violation<T>> {
        let Some(exact) = self.exact else { return Vec::new() };
        self.entries
            .iter()
            .filter_map(|e| {
                let v = e.value?;
                let x = exact.get(e.quantity);
                let bad = match e.side {
                    Side::Lower => v > x + slack,
                    Side::Upper => v < x - slack,
                };
                bad.then(|| Violation { id: e.id(), side: e.side, value: v, exact: x })
            })
            .collect()
    }

    /// Keeps only entries whose id or name is listed.
    pub fn retain_named(&mut self, names: &[String]) {
        self.entries.retain(|e| names.iter().any(|n| *n == e.id() || n == e.name));
    }
}
