//! Named monoids: `name[:param]` specs and comma-separated products of them.

use crate::error::{Error, Result};
use crate::finite::{FiniteMonoid, DEFAULT_TRANSFORMATION_BOUND};
use crate::monoid::MonoidRef;

/// The monoid called `name`, with an optional integer parameter.
///
/// Accepted names: `trivial`, `cyclic` (`cyclic-group`), `chain`
/// (`semilattice-chain`), `nat` (`monogenic`), `bicyclic`, `bicyclic0`
/// (`bicyclic-zero`), `Tn` (`transformation`) and `singular`
/// (`singular-plus-identity`).
pub fn standard_family(name: &str, param: Option<usize>) -> Result<MonoidRef> {
    let family = name.trim();
    let need = |what: &str| -> Result<usize> {
        param.ok_or_else(|| Error::BadParams {
            family: family.to_string(),
            reason: format!("missing {what}, write {family}:<k>"),
        })
    };
    let none = || -> Result<()> {
        match param {
            None => Ok(()),
            Some(_) => Err(Error::BadParams {
                family: family.to_string(),
                reason: "takes no parameter".into(),
            }),
        }
    };
    let finite = |m: FiniteMonoid| Ok(MonoidRef::finite(m));
    match family {
        "trivial" => {
            none()?;
            Ok(MonoidRef::trivial())
        }
        "cyclic" | "cyclic-group" => finite(FiniteMonoid::cyclic_group(need("order")?)?),
        "chain" | "semilattice-chain" => finite(FiniteMonoid::semilattice_chain(need("length")?)?),
        "nat" | "monogenic" => {
            none()?;
            Ok(MonoidRef::monogenic())
        }
        "bicyclic" => {
            none()?;
            Ok(MonoidRef::bicyclic())
        }
        "bicyclic0" | "bicyclic-zero" => {
            none()?;
            Ok(MonoidRef::bicyclic_zero())
        }
        "Tn" | "tn" | "transformation" => finite(FiniteMonoid::transformation(need("degree")?)?),
        "singular" | "singular-plus-identity" => finite(FiniteMonoid::singular_plus_identity(
            need("degree")?,
            DEFAULT_TRANSFORMATION_BOUND,
        )?),
        _ => Err(Error::UnknownFamily(family.to_string())),
    }
}

/// Parses `name[:param]`.
pub fn parse_builtin(spec: &str) -> Result<MonoidRef> {
    let spec = spec.trim();
    match spec.split_once(':') {
        None => standard_family(spec, None),
        Some((name, p)) => {
            let k = p.trim().parse::<usize>().map_err(|_| Error::BadParams {
                family: name.to_string(),
                reason: format!("parameter {p:?} is not a non-negative integer"),
            })?;
            standard_family(name, Some(k))
        }
    }
}

/// Parses a comma-separated list of builtins into their direct product.
pub fn parse_product(spec: &str) -> Result<MonoidRef> {
    let factors = spec
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_builtin)
        .collect::<Result<Vec<_>>>()?;
    Ok(MonoidRef::product(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_aliases() {
        assert_eq!(parse_builtin("cyclic:2").unwrap().order(), Some(2));
        assert_eq!(parse_builtin("cyclic-group:3").unwrap().order(), Some(3));
        assert_eq!(parse_builtin("chain:2").unwrap().order(), Some(2));
        assert_eq!(parse_builtin("nat").unwrap(), MonoidRef::monogenic());
        assert_eq!(parse_builtin("bicyclic-zero").unwrap(), MonoidRef::bicyclic_zero());
        assert_eq!(parse_builtin("Tn:3").unwrap().order(), Some(27));
        assert_eq!(parse_builtin("singular:3").unwrap().order(), Some(22));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_builtin("free"), Err(Error::UnknownFamily(_))));
        assert!(matches!(parse_builtin("cyclic"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_builtin("cyclic:x"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_builtin("nat:2"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_builtin("Tn:6"), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn products() {
        let p = parse_product("cyclic:2,chain:2,nat,bicyclic").unwrap();
        assert_eq!(p.factors().len(), 4);
        assert_eq!(parse_product("cyclic:2").unwrap().order(), Some(2));
    }
}
