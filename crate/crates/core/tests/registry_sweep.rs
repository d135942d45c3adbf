//! Cross-registry invariants: every built-in algebra satisfies the defining
//! identities of its own data, and the derived reports are internally
//! consistent.

use antirotor::algebra::FieldKind;
use antirotor::invariants::invariant_report;
use antirotor::registry::{registry, registry_names};
use antirotor::skewer::anti_rotor;

/// Concrete instantiations of the parametrized registry names, capped where
/// a family is unbounded.
fn concrete_names() -> Vec<String> {
    let mut out = Vec::new();
    for (pattern, _) in registry_names() {
        match pattern {
            "toeplitz:<n>" => out.extend((2..=5).map(|n| format!("toeplitz:{n}"))),
            "matrix:<n>" => out.extend((1..=3).map(|n| format!("matrix:{n}"))),
            "cayley-dickson:<d>" => {
                out.extend([1usize, 2, 4, 8].iter().map(|d| format!("cayley-dickson:{d}")))
            }
            "spin:<m>" => out.extend((2..=3).map(|m| format!("spin:{m}"))),
            "prodr:<n>" => out.extend((1..=4).map(|n| format!("prodr:{n}"))),
            p => out.push(p.to_string()),
        }
    }
    out
}

#[test]
fn inverse_identity_holds_on_every_unital_registry_algebra() {
    for name in concrete_names() {
        let alg = registry(&name).unwrap();
        if !alg.unital {
            continue;
        }
        let field = alg.symbolic_inverse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(
            field.verify_inverse_identity(&alg),
            "{name}: L_s·p ≠ q·1 as polynomials"
        );
        // the first component round-trips through the normalized ratio form
        let r = field.component(0);
        assert!(!r.den.is_zero());
    }
}

#[test]
fn declared_flags_match_reality() {
    // associativity flags by exhaustive check are part of construction; the
    // expectations here are external facts about the families.
    for (name, assoc, unital) in [
        ("complex", true, true),
        ("split-complex", true, true),
        ("matrix:3", true, true),
        ("toeplitz:5", true, true),
        ("quaternion", true, true),
        ("cayley-dickson:8", false, true),
        ("spin:2", false, true),
        ("spin:3", false, true),
        ("nilpotent", true, false),
    ] {
        let alg = registry(name).unwrap();
        assert_eq!(alg.associative, assoc, "{name}: associativity");
        assert_eq!(alg.unital, unital, "{name}: unitality");
    }
}

#[test]
fn family_dimension_at_least_one_and_reports_consistent() {
    for name in concrete_names() {
        let alg = registry(&name).unwrap();
        if !alg.unital || !alg.associative || alg.dim > 6 {
            continue;
        }
        let u = anti_rotor(&alg, FieldKind::Inverse).unwrap();
        assert!(u.param_count >= 1, "{name}: empty metric family");
        let rep = invariant_report(&alg, &u).unwrap();
        assert!(
            rep.min_nonzero_rank <= rep.max_rank && rep.max_rank <= alg.dim,
            "{name}: rank ordering"
        );
        assert!(
            rep.det_poly_exact.total_degree() as usize <= alg.dim,
            "{name}: det degree bound"
        );
        assert_eq!(
            rep.det_poly_exact.is_zero(),
            rep.max_rank < alg.dim,
            "{name}: det ≡ 0 iff max rank deficient"
        );
        assert!(rep.sensitive_param_count <= rep.anti_rotor_dim, "{name}: sensitivity bound");
        // every unital associative algebra has the ever-present log
        // parameter
        let (_, log, _) = rep.tau_raw.unwrap();
        assert!(rep.tau_certified, "{name}: τ uncertified");
        assert!(log >= 1, "{name}: τ_log = 0");
    }
}

#[test]
fn prodr_and_toeplitz_families_have_full_dimension() {
    for n in 2..=4usize {
        let up = anti_rotor(&registry(&format!("prodr:{n}")).unwrap(), FieldKind::Inverse)
            .unwrap();
        let ut = anti_rotor(&registry(&format!("toeplitz:{n}")).unwrap(), FieldKind::Inverse)
            .unwrap();
        assert_eq!(up.param_count, n);
        assert_eq!(ut.param_count, n);
    }
}
