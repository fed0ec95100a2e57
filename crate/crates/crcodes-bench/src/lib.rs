//! Construction of the fixed subject codes measured in `benches/core_ops.rs`,
//! kept in a library so the benchmark setup itself is unit-tested.

use crcodes::constructions::{construction_i, construction_ii, hamming_code};
use crcodes::LinearCode;

/// [7,4] binary Hamming code: the smallest brute-force verifier subject.
pub fn hamming_7() -> LinearCode {
    hamming_code(2, 3).expect("valid parameters")
}

/// [14,8] two-copy concatenation of the [7,4] Hamming parity matrix.
pub fn small_family_code() -> LinearCode {
    construction_i(2, 3, 2).expect("valid parameters")
}

/// [36,29] extension of the smallest shifted-copy concatenation.
pub fn medium_extended_code() -> LinearCode {
    construction_ii(2, 3, 2).expect("valid parameters").extend()
}

/// [63,57] shifted-copy concatenation equal to a Hamming code.
pub fn hamming_63() -> LinearCode {
    construction_ii(2, 3, 6).expect("valid parameters")
}

/// [136,127] extension of the longest verified shifted-copy concatenation.
pub fn long_extended_code() -> LinearCode {
    construction_ii(2, 4, 6).expect("valid parameters").extend()
}
