use qmat::{HermitianOperator, SubsystemShape};

use crate::error::MomentsError;
use crate::symbol::EffectSymbol;

/// An explicit finite-dimensional realization: resource states plus the
/// per-setting POVMs that effect symbols refer to.
///
/// States may be sub-normalized (assemblage members); effects must be
/// positive up to `1e-10` and each setting must sum to the identity.
#[derive(Debug, Clone)]
pub struct Strategy {
    state_space_dims: SubsystemShape,
    states: Vec<HermitianOperator>,
    povms: Vec<Vec<HermitianOperator>>,
}

impl Strategy {
    pub const PSD_TOL: f64 = 1e-10;

    pub fn new(
        state_space_dims: SubsystemShape,
        states: Vec<HermitianOperator>,
        povms: Vec<Vec<HermitianOperator>>,
    ) -> Result<Self, MomentsError> {
        let mut effect_dim = None;
        for (setting, effects) in povms.iter().enumerate() {
            let mut sum: Option<HermitianOperator> = None;
            for (outcome, e) in effects.iter().enumerate() {
                match effect_dim {
                    None => effect_dim = Some(e.dim()),
                    Some(d) if d == e.dim() => {}
                    Some(_) => return Err(MomentsError::MixedEffectDimensions),
                }
                let min_eig = e.min_eigenvalue();
                if min_eig < -Self::PSD_TOL {
                    return Err(MomentsError::EffectNotPsd {
                        setting,
                        outcome,
                        min_eig,
                    });
                }
                sum = Some(match sum {
                    None => e.clone(),
                    Some(s) => s.add(e)?,
                });
            }
            if let Some(s) = sum {
                let defect = s
                    .sub(&HermitianOperator::identity(s.dim()))?
                    .matrix()
                    .max_abs();
                if defect > Self::PSD_TOL {
                    return Err(MomentsError::PovmIncomplete { setting, defect });
                }
            }
        }
        for (index, state) in states.iter().enumerate() {
            let min_eig = state.min_eigenvalue();
            if min_eig < -Self::PSD_TOL {
                return Err(MomentsError::StateNotPsd { index, min_eig });
            }
        }
        Ok(Self {
            state_space_dims,
            states,
            povms,
        })
    }

    pub fn state_space_dims(&self) -> &SubsystemShape {
        &self.state_space_dims
    }

    pub fn states(&self) -> &[HermitianOperator] {
        &self.states
    }

    pub fn povms(&self) -> &[Vec<HermitianOperator>] {
        &self.povms
    }

    /// Dimension the POVM effects act on.
    pub fn effect_dim(&self) -> Option<usize> {
        self.povms.first().and_then(|e| e.first()).map(|e| e.dim())
    }

    pub fn effect(&self, symbol: &EffectSymbol) -> Result<&HermitianOperator, MomentsError> {
        self.povms
            .get(symbol.setting)
            .and_then(|effects| effects.get(symbol.outcome))
            .ok_or(MomentsError::UnknownSymbol {
                setting: symbol.setting,
                outcome: symbol.outcome,
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qmat::consts;

    #[test]
    fn accepts_projective_qubit_strategy() {
        let shape = SubsystemShape::new(vec![2]).unwrap();
        let s = Strategy::new(
            shape,
            vec![consts::proj0().scale(0.5)],
            vec![
                vec![consts::proj0(), consts::proj1()],
                vec![consts::proj_plus(), consts::proj_minus()],
            ],
        );
        assert!(s.is_ok());
    }

    #[test]
    fn rejects_incomplete_povm() {
        let shape = SubsystemShape::new(vec![2]).unwrap();
        let s = Strategy::new(
            shape,
            vec![],
            vec![vec![consts::proj0(), consts::proj0()]],
        );
        assert!(matches!(s, Err(MomentsError::PovmIncomplete { .. })));
    }

    #[test]
    fn rejects_negative_effect() {
        let shape = SubsystemShape::new(vec![2]).unwrap();
        let e = consts::pauli_z(); // eigenvalue -1
        let complement = HermitianOperator::identity(2).sub(&e).unwrap();
        let s = Strategy::new(shape, vec![], vec![vec![e, complement]]);
        assert!(matches!(s, Err(MomentsError::EffectNotPsd { .. })));
    }
}
