use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum MomentsError {
    #[error(transparent)]
    Qmat(#[from] qmat::QmatError),

    #[error("word list must start with the identity word")]
    MissingIdentityWord,

    #[error("word list contains a duplicate or unreduced word at position {index}")]
    InvalidWordList { index: usize },

    #[error("strategy has no effect for setting {setting}, outcome {outcome}")]
    UnknownSymbol { setting: usize, outcome: usize },

    #[error("POVM effect ({setting},{outcome}) has negative eigenvalue {min_eig:.3e}")]
    EffectNotPsd {
        setting: usize,
        outcome: usize,
        min_eig: f64,
    },

    #[error("POVM for setting {setting} does not sum to identity (defect {defect:.3e})")]
    PovmIncomplete { setting: usize, defect: f64 },

    #[error("state {index} has negative eigenvalue {min_eig:.3e}")]
    StateNotPsd { index: usize, min_eig: f64 },

    #[error("strategy effects have mixed dimensions")]
    MixedEffectDimensions,

    #[error("target dimension {target} incompatible with effect dimension {effects}")]
    TargetDimension { target: usize, effects: usize },

    #[error("span was sampled for a different word list or dimension")]
    SpanMismatch,
}
