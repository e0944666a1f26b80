use crate::cochain::{Cochain, Transgressions};
use crate::error::{Error, Result};

use super::{gamma_at, EtaleDatum};

/// Outcome of validating an étale datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleReport {
    /// First failure of each violated constraint, with the offending tuple.
    pub failures: Vec<String>,
    /// Whether the closed forms as stated, ε_{gh}(f) = ε_g(ʰf) ε_h(f) α(f|g,h)
    /// and γ(f,g) ε_h(fg) = α(f,g|h) ε_h(f) ε_h(g) γ(ʰf,ʰg), also hold.
    pub closed_form_eps1: bool,
    pub closed_form_eps2: bool,
}

impl EtaleReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that (H, F, γ, ε) defines a commutative algebra in Z(H, α|_H):
/// d(γ) = α|_F, α-projectivity of h(e_f) = ε_h(f) e_{hfh⁻¹}, multiplicativity
/// of the action and commutativity.
pub fn validate_etale(alpha: &Cochain, datum: &EtaleDatum) -> Result<EtaleReport> {
    let g = alpha.group();
    let (h, f) = (&datum.h, &datum.f);
    if !std::sync::Arc::ptr_eq(h.parent(), g) && h.parent().as_ref() != g.as_ref() {
        return Err(Error::MismatchedContext);
    }
    if !f.is_subgroup_of(h) {
        return Err(Error::NotASubgroup);
    }
    if !f.is_normal_in(h) {
        return Err(Error::NotNormal);
    }
    if datum.epsilon.h() != h || datum.epsilon.f() != f {
        return Err(Error::InvalidDatum("epsilon table has the wrong shape".into()));
    }
    let t = Transgressions::new(alpha);
    let eps = |x: usize, y: usize| datum.epsilon.get(x, y);
    let gam = |x: usize, y: usize| gamma_at(f, &datum.gamma, x, y);
    let name = |x: usize| g.name(x).to_string();
    let mut failures = Vec::new();

    if let Some(args) = (0..f.order().pow(3)).find_map(|i| {
        let (a, b, c) = (f.elements()[i / (f.order() * f.order())], f.elements()[(i / f.order()) % f.order()], f.elements()[i % f.order()]);
        let dg = gam(b, c) - gam(g.mul(a, b), c) + gam(a, g.mul(b, c)) - gam(a, b);
        (dg != alpha.at3(a, b, c)).then_some((a, b, c))
    }) {
        failures.push(format!("d(gamma) != alpha at ({},{},{})", name(args.0), name(args.1), name(args.2)));
    }

    let mut pa = None;
    let mut eps1 = true;
    'pa: for &x in h.elements() {
        for &y in h.elements() {
            for &z in f.elements() {
                let lhs = eps(g.mul(x, y), z);
                let rest = eps(y, z) + eps(x, g.conj(y, z));
                if pa.is_none() && lhs != t.right(x, y, z) + rest {
                    pa = Some((x, y, z));
                }
                if lhs != t.left(z, x, y) + rest {
                    eps1 = false;
                }
                if pa.is_some() && !eps1 {
                    break 'pa;
                }
            }
        }
    }
    if let Some((x, y, z)) = pa {
        failures.push(format!("projectivity fails at g={}, h={}, f={}", name(x), name(y), name(z)));
    }

    let mut ah = None;
    let mut eps2 = true;
    'ah: for &x in h.elements() {
        for &a in f.elements() {
            for &b in f.elements() {
                let lhs = gam(a, b) + eps(x, g.mul(a, b));
                let rest = eps(x, a) + eps(x, b) + gam(g.conj(x, a), g.conj(x, b));
                if ah.is_none() && lhs != t.left(x, a, b) + rest {
                    ah = Some((x, a, b));
                }
                if lhs != t.right(a, b, x) + rest {
                    eps2 = false;
                }
                if ah.is_some() && !eps2 {
                    break 'ah;
                }
            }
        }
    }
    if let Some((x, a, b)) = ah {
        failures.push(format!("multiplicativity fails at h={}, f={}, g={}", name(x), name(a), name(b)));
    }

    if let Some((a, b)) = f
        .elements()
        .iter()
        .flat_map(|&a| f.elements().iter().map(move |&b| (a, b)))
        .find(|&(a, b)| gam(a, b) != eps(a, b) + gam(g.conj(a, b), a))
    {
        failures.push(format!("commutativity fails at f={}, g={}", name(a), name(b)));
    }

    Ok(EtaleReport { failures, closed_form_eps1: eps1, closed_form_eps2: eps2 })
}
