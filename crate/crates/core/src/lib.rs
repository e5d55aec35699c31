//! Exact entanglement-fidelity analysis for a qubit encoded in a qudit
//! (`d = 2 r1 r2`) and for the five- and seven-qubit block codes, under
//! symmetric, asymmetric and correlated Weyl channels.
//!
//! The pipeline is: build a code ([`codes`]), enumerate the channel's Kraus
//! terms ([`channels`]), build the recovery from the correctable set
//! ([`correction`]) and evaluate or extract the fidelity ([`fidelity`]).
//!
//! ```
//! use qudit_qec::{ChannelFamily, CodeId, FidelityEngine};
//!
//! let engine = FidelityEngine::for_code(CodeId::D18, ChannelFamily::Symmetric).unwrap();
//! let f = engine.polynomial().unwrap();
//! assert_eq!(f.to_string(), "1 - 4*p^2 - 2*p^3 + 4*p^4 + 4*p^5 + p^6");
//! ```

pub mod channels;
pub mod codes;
pub mod correction;
pub mod error;
pub mod exactpoly;
pub mod expected;
pub mod fidelity;
pub mod paulialg;
pub mod phasespace;

pub use channels::{ChannelFamily, KrausTerm};
pub use codes::{CodeId, CodeKind, StabilizerCode, Syndrome};
pub use correction::RecoveryMap;
pub use error::{Error, Result};
pub use exactpoly::{Point, RationalPolynomial, Variable};
pub use fidelity::FidelityEngine;
pub use paulialg::{Pauli, QubitPauliString, QuditPauli};
