use std::sync::Arc;

use super::monomial::Monomial;
use super::poly::{RingSpec, TruncPoly};
use crate::error::{Error, Result};

/// Ring map `source -> target = source / (form)` obtained by solving the
/// form for one variable and substituting.
#[derive(Debug, Clone)]
pub struct Substitution {
    source: Arc<RingSpec>,
    target: Arc<RingSpec>,
    eliminated: usize,
    /// Image of the eliminated variable, a linear form in the target.
    image: TruncPoly,
}

impl Substitution {
    pub fn source(&self) -> &Arc<RingSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingSpec> {
        &self.target
    }

    pub fn eliminated_variable(&self) -> &str {
        &self.source.names()[self.eliminated]
    }

    /// Image of a source variable.
    pub fn image_of_var(&self, i: usize) -> TruncPoly {
        if i == self.eliminated {
            self.image.clone()
        } else {
            let j = if i < self.eliminated { i } else { i - 1 };
            TruncPoly::var(&self.target, j)
        }
    }

    pub fn apply(&self, p: &TruncPoly) -> Result<TruncPoly> {
        if **p.spec() != *self.source {
            return Err(Error::SpecMismatch(format!(
                "substitution expects ring {:?}",
                self.source.names()
            )));
        }
        let f = *self.target.field();
        let nt = self.target.nvars();
        let mut powers: Vec<TruncPoly> = vec![TruncPoly::constant(&self.target, 1)];
        let mut out = TruncPoly::zero(&self.target);
        for (m, &c) in p.terms() {
            let e = m.exponents()[self.eliminated] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(&self.image)?;
                powers.push(next);
            }
            let rest: Vec<u16> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != self.eliminated)
                .map(|(_, &x)| x)
                .collect();
            debug_assert_eq!(rest.len(), nt);
            let shift = Monomial::new(rest);
            for (pm, &pc) in powers[e].terms() {
                out.add_term(shift.mul(pm), f.mul(c, pc));
            }
        }
        Ok(out)
    }
}

/// Solve the linear `form` for its last variable with nonzero coefficient
/// and return the ring with that variable removed together with the
/// substitution computing images in `Q / (form)`.
pub fn eliminate_linear_form(spec: &Arc<RingSpec>, form: &TruncPoly) -> Result<(Arc<RingSpec>, Substitution)> {
    if **form.spec() != **spec {
        return Err(Error::SpecMismatch("form lives in a different ring".into()));
    }
    if !form.is_linear_form() {
        return Err(Error::Precondition(format!("`{form}` is not a nonzero linear form")));
    }
    if spec.nvars() < 2 {
        return Err(Error::Precondition("cannot eliminate the only variable".into()));
    }
    let f = *spec.field();
    let coeffs = form.linear_coefficients();
    let k = coeffs.iter().rposition(|&c| c != 0).expect("nonzero form");
    let names: Vec<String> = spec
        .names()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, n)| n.clone())
        .collect();
    let target = RingSpec::new(names, f, spec.cap())?;
    // x_k = -(1/c_k) sum_{i != k} c_i x_i
    let scale = f.neg(f.inv(coeffs[k]));
    let img: Vec<u32> = coeffs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, &c)| f.mul(c, scale))
        .collect();
    let image = TruncPoly::linear(&target, &img)?;
    Ok((
        target.clone(),
        Substitution {
            source: spec.clone(),
            target,
            eliminated: k,
            image,
        },
    ))
}

/// Re-express a polynomial of a ring whose variables are a subset of
/// `into`'s variables (matched by name) as an element of `into`.
pub fn embed_by_names(p: &TruncPoly, into: &Arc<RingSpec>) -> Result<TruncPoly> {
    let from = p.spec();
    let map: Vec<usize> = from
        .names()
        .iter()
        .map(|n| {
            into.var_index(n)
                .ok_or_else(|| Error::SpecMismatch(format!("variable `{n}` missing from target ring")))
        })
        .collect::<Result<_>>()?;
    let terms = p.terms().iter().map(|(m, &c)| {
        let mut e = vec![0u16; into.nvars()];
        for (i, &x) in m.exponents().iter().enumerate() {
            e[map[i]] = x;
        }
        (Monomial::new(e), c)
    });
    Ok(TruncPoly::from_terms(into, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::ring::parse_poly;

    fn ring() -> Arc<RingSpec> {
        let names = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        RingSpec::new(names, PrimeField::default(), 8).unwrap()
    }

    #[test]
    fn eliminating_t_sets_it_to_zero() {
        let r = ring();
        let (s, sub) = eliminate_linear_form(&r, &parse_poly("t", &r).unwrap()).unwrap();
        assert_eq!(s.names(), ["x", "y", "z"]);
        let p = parse_poly("x*t + y^2 + t^3", &r).unwrap();
        assert_eq!(sub.apply(&p).unwrap(), parse_poly("y^2", &s).unwrap());
    }

    #[test]
    fn eliminating_x_minus_y_identifies_them() {
        let r = ring();
        let (s, sub) = eliminate_linear_form(&r, &parse_poly("x-y", &r).unwrap()).unwrap();
        assert_eq!(s.nvars(), 3);
        assert_eq!(sub.eliminated_variable(), "y");
        assert_eq!(sub.image_of_var(1), parse_poly("x", &s).unwrap());
        assert!(sub.apply(&parse_poly("x^2*(x-y)", &r).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_linear_forms() {
        let r = ring();
        assert!(eliminate_linear_form(&r, &parse_poly("x^2", &r).unwrap()).is_err());
        assert!(eliminate_linear_form(&r, &parse_poly("0", &r).unwrap()).is_err());
        assert!(eliminate_linear_form(&r, &parse_poly("x+1", &r).unwrap()).is_err());
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let r = ring();
        let form = parse_poly("3*x + 5*y - z + 7*t", &r).unwrap();
        let (_, sub) = eliminate_linear_form(&r, &form).unwrap();
        let a = parse_poly("x*y - t^2 + z", &r).unwrap();
        let b = parse_poly("(x + t)^3 - y", &r).unwrap();
        let lhs = sub.apply(&a.mul(&b).unwrap()).unwrap();
        let rhs = sub.apply(&a).unwrap().mul(&sub.apply(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(sub.apply(&form).unwrap().is_zero());
    }

    #[test]
    fn embedding_by_names() {
        let r = ring();
        let (s, _) = eliminate_linear_form(&r, &parse_poly("y", &r).unwrap()).unwrap();
        let p = parse_poly("x*t + z", &s).unwrap();
        assert_eq!(embed_by_names(&p, &r).unwrap(), parse_poly("x*t + z", &r).unwrap());
        assert!(embed_by_names(&parse_poly("x*y", &r).unwrap(), &s).is_err());
    }
}
