//! Airy values against frozen extended-precision references.

mod data {
    include!("data/airy_reference.rs");
}

use qshje::specfun;

/// Relative error against the reference, floored near zeros of the
/// oscillatory functions: no fixed-precision evaluation can hold a relative
/// bound arbitrarily close to a zero, so the comparison scale is the
/// reference value or a small fraction of the local modulus, whichever is
/// larger.
fn rel_err(got: f64, want: f64, modulus: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-2 * modulus)
}

#[test]
fn reference_grid_to_1e12() {
    for row in data::AIRY_REFERENCE.iter() {
        let [z, ai_ref, aip_ref, bi_ref, bip_ref] = *row;
        let (ai, aip) = specfun::airy_ai(z).unwrap();
        let (bi, bip) = specfun::airy_bi(z).unwrap();
        let m = (ai_ref * ai_ref + bi_ref * bi_ref).sqrt();
        let mp = (aip_ref * aip_ref + bip_ref * bip_ref).sqrt();
        assert!(
            rel_err(ai, ai_ref, m) < 1e-12,
            "Ai({z}): {ai} vs {ai_ref} ({:.3e})",
            rel_err(ai, ai_ref, m)
        );
        assert!(
            rel_err(aip, aip_ref, mp) < 1e-12,
            "Ai'({z}): {aip} vs {aip_ref}"
        );
        assert!(rel_err(bi, bi_ref, m) < 1e-12, "Bi({z}): {bi} vs {bi_ref}");
        assert!(
            rel_err(bip, bip_ref, mp) < 1e-12,
            "Bi'({z}): {bip} vs {bip_ref}"
        );
    }
}

#[test]
fn far_positive_log_magnitudes() {
    for row in data::AIRY_LOG_REFERENCE.iter() {
        let [z, ln_ai, ln_aip, ln_bi, ln_bip] = *row;
        let s = specfun::airy_scaled(z).unwrap();
        for (got, want, name) in [
            (s.ai.log_magnitude, ln_ai, "Ai"),
            (s.ai_prime.log_magnitude, ln_aip, "Ai'"),
            (s.bi.log_magnitude, ln_bi, "Bi"),
            (s.bi_prime.log_magnitude, ln_bip, "Bi'"),
        ] {
            // absolute agreement of logs = relative agreement of values
            assert!(
                (got - want).abs() < 1e-12 * want.abs().max(1.0),
                "ln|{name}|({z}): {got} vs {want}"
            );
        }
        assert_eq!(s.ai.sign, 1);
        assert_eq!(s.ai_prime.sign, -1);
        assert_eq!(s.bi.sign, 1);
        assert_eq!(s.bi_prime.sign, 1);
    }
}

#[test]
fn far_negative_moduli() {
    // The absolute oscillation phase at huge |z| is not resolvable in f64,
    // but the moduli Ai^2 + Bi^2 and Ai'^2 + Bi'^2 are phase-free.
    for row in data::AIRY_MODULUS_REFERENCE.iter() {
        let [z, m2_ref, n2_ref] = *row;
        let s = specfun::airy_scaled(z).unwrap();
        let m2 = s.ai.square().add(s.bi.square()).to_f64();
        let n2 = s.ai_prime.square().add(s.bi_prime.square()).to_f64();
        assert!(
            ((m2 - m2_ref) / m2_ref).abs() < 1e-10,
            "modulus at {z}: {m2} vs {m2_ref}"
        );
        assert!(
            ((n2 - n2_ref) / n2_ref).abs() < 1e-10,
            "derivative modulus at {z}: {n2} vs {n2_ref}"
        );
    }
}
