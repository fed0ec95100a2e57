/// Caps on the exhaustive loops, so that an oversized request fails fast
/// with [`crate::Error::TooLarge`] instead of running for hours.
///
/// `words` caps codeword and design-tuple enumerations, `syndromes` caps the
/// size of the syndrome space walked by coset analysis, and `vectors` caps
/// the brute-force oracle that visits all q^n vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub words: u64,
    pub syndromes: u64,
    pub vectors: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            words: 1 << 24,
            syndromes: 1 << 26,
            vectors: 1 << 20,
        }
    }
}

/// Environment variable that overrides the default budget for the CLI.
pub const BUDGET_ENV: &str = "CRCODES_BUDGET";

impl Budget {
    /// One knob for all three caps. The brute-force oracle keeps its hard
    /// 2^20 ceiling; it exists to cross-check small codes, not to scale.
    pub fn uniform(cap: u64) -> Self {
        Budget {
            words: cap,
            syndromes: cap,
            vectors: cap.min(1 << 20),
        }
    }

    /// Default budget, overridden by the `CRCODES_BUDGET` variable when set.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok()) {
            Some(cap) => Budget::uniform(cap),
            None => Budget::default(),
        }
    }

    pub(crate) fn check_words(&self, required: u128) -> crate::Result<()> {
        if required > self.words as u128 {
            return Err(crate::Error::TooLarge {
                required,
                budget: self.words,
            });
        }
        Ok(())
    }

    pub(crate) fn check_syndromes(&self, required: u128) -> crate::Result<()> {
        if required > self.syndromes as u128 {
            return Err(crate::Error::TooLarge {
                required,
                budget: self.syndromes,
            });
        }
        Ok(())
    }

    pub(crate) fn check_vectors(&self, required: u128) -> crate::Result<()> {
        if required > self.vectors as u128 {
            return Err(crate::Error::TooLarge {
                required,
                budget: self.vectors,
            });
        }
        Ok(())
    }
}
