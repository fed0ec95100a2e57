//! Cross-checks beyond the ten-part battery: a ternary second-family
//! instance, the k = 4 extension of the first family, dual-spectrum
//! predictions against enumeration, and subconstituent designs.

use crcodes::analysis::{
    predicted_c3, predicted_dual_weights, predicted_ia, predicted_ia_extended_ii, verify_design,
    Family,
};
use crcodes::constructions::{construction_i, construction_ii, sporadic_code, SporadicId};
use crcodes::cosets::verify_completely_regular;
use crcodes::Budget;

#[test]
fn ternary_second_family_instance() {
    let budget = Budget::default();
    let code = construction_ii(3, 3, 1).unwrap();
    assert_eq!((code.n(), code.k()), (52, 46));
    let report = verify_completely_regular(&code, &budget).unwrap();
    assert!(report.is_cr);
    let ia = report.ia.unwrap();
    assert_eq!(ia.to_string(), "{104,72;1,12}");
    assert_eq!(ia, predicted_ia(Family::II, 3, 3, 1).unwrap());
    assert_eq!(predicted_c3(Family::II, 3, 3, 1).unwrap(), 520);
    assert_eq!(code.codewords_of_weight(3, &budget).unwrap().len(), 520);
}

#[test]
fn first_family_extension_holds_at_k_4() {
    // c = 2^{k-1} + 1 = 9 is the one completely regular extension, and
    // its array matches the extended second family; a neighboring c is
    // not completely regular.
    let budget = Budget::default();
    let ext = construction_i(2, 4, 9).unwrap().extend();
    assert_eq!((ext.n(), ext.k()), (136, 127));
    let report = verify_completely_regular(&ext, &budget).unwrap();
    assert!(report.is_cr, "witness {:?}", report.witness);
    assert_eq!(report.ia.unwrap(), predicted_ia_extended_ii(4).unwrap());

    let ext = construction_i(2, 4, 8).unwrap().extend();
    let report = verify_completely_regular(&ext, &budget).unwrap();
    assert!(!report.is_cr);
    assert!(report.witness.is_some());
}

#[test]
fn dual_spectrum_predictions_match_enumeration() {
    let budget = Budget::default();
    for (family, q, k, c) in [
        (Family::I, 2u16, 3usize, 2usize),
        (Family::I, 2, 3, 5),
        (Family::I, 3, 3, 2),
        (Family::I, 4, 2, 2),
        (Family::II, 2, 3, 2),
        (Family::II, 2, 3, 6),
        (Family::II, 2, 4, 6),
        (Family::II, 3, 3, 1),
    ] {
        let code = match family {
            Family::I => construction_i(q, k, c).unwrap(),
            Family::II => construction_ii(q, k, c).unwrap(),
        };
        let dual = code.dual_weight_distribution(&budget).unwrap();
        let predicted = predicted_dual_weights(family, q, k, c).unwrap();
        let weights: Vec<usize> = predicted.iter().map(|&(w, _)| w).collect();
        assert_eq!(
            dual.support(),
            weights,
            "dual support for ({family:?},{q},{k},{c})"
        );
        for (w, count) in predicted {
            if let Some(count) = count {
                assert_eq!(
                    dual.count_u64(w),
                    Some(count),
                    "dual weight {w} count for ({family:?},{q},{k},{c})"
                );
            }
        }
    }
}

#[test]
fn grid_code_subconstituents_are_designs() {
    // d = 2e+1 = 3 makes the weight-3 words a 1-design; the extension has
    // d = 2e+2 = 4 and its weight-4 words form a 2-design.
    let budget = Budget::default();
    let s1 = sporadic_code(SporadicId::S1);
    let words = s1.codewords_of_weight(3, &budget).unwrap();
    let r = verify_design(2, &words, 1, &budget)
        .unwrap()
        .expect("weight-3 words must form a 1-design");
    assert_eq!(words.len() * 3, 15 * r as usize);

    let s1x = sporadic_code(SporadicId::S1Ext);
    let words = s1x.codewords_of_weight(4, &budget).unwrap();
    let lambda = verify_design(2, &words, 2, &budget)
        .unwrap()
        .expect("weight-4 words of the extension must form a 2-design");
    // lambda * C(16,2) = |C_4| * C(4,2)
    assert_eq!(lambda as usize * 120, words.len() * 6);
}
