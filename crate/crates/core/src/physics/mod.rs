//! Closed-form temporal functions of specific physical systems.

pub mod kinetic;
pub mod lorentz;
pub mod oscillator;
pub mod qed;
pub mod two_level;
