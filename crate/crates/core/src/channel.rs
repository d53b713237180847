//! The symmetric four-letter channel that never delivers the sent letter.
//!
//! `Q(y|x) = 0` if `y == x` and `1/3` otherwise. Its n-th extension maps a
//! word `x` uniformly onto the `3^n` words that differ from `x` in every
//! coordinate.

use crate::gf4::{Word, F4};
use crate::scalar::{RealScalar, Scalar};
use rand::Rng;

/// Marker for the channel law; it has no parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AntiChannel;

/// Entropies in bits under the uniform input distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoQuantities<T> {
    pub h_y: T,
    pub h_y_given_x: T,
    pub mutual_info: T,
    pub capacity: T,
}

impl AntiChannel {
    pub const ALPHABET_SIZE: usize = 4;

    /// `Q(y|x)`.
    pub fn conditional<T: Scalar>(&self, y: F4, x: F4) -> T {
        if x == y {
            T::zero()
        } else {
            T::ratio(1, 3)
        }
    }

    /// `Pr{X=x, Y=y}` under the uniform input.
    pub fn joint_probability<T: Scalar>(&self, x: F4, y: F4) -> T {
        if x == y {
            T::zero()
        } else {
            T::ratio(1, 12)
        }
    }

    pub fn marginal_x<T: Scalar>(&self, x: F4) -> T {
        F4::ALL
            .iter()
            .fold(T::zero(), |acc, &y| acc + self.joint_probability::<T>(x, y))
    }

    pub fn marginal_y<T: Scalar>(&self, y: F4) -> T {
        F4::ALL
            .iter()
            .fold(T::zero(), |acc, &x| acc + self.joint_probability::<T>(x, y))
    }

    /// Entropies computed term by term from the joint distribution.
    pub fn info_quantities<T: RealScalar>(&self) -> InfoQuantities<T> {
        let mut h_y = T::zero();
        for &y in &F4::ALL {
            let p: T = self.marginal_y(y);
            if p > T::zero() {
                h_y = h_y - p * p.log2();
            }
        }
        let mut h_y_given_x = T::zero();
        let mut mutual_info = T::zero();
        for &x in &F4::ALL {
            for &y in &F4::ALL {
                let pxy: T = self.joint_probability(x, y);
                if pxy > T::zero() {
                    let q: T = self.conditional(y, x);
                    h_y_given_x = h_y_given_x - pxy * q.log2();
                    let px: T = self.marginal_x(x);
                    let py: T = self.marginal_y(y);
                    mutual_info = mutual_info + pxy * (pxy / (px * py)).log2();
                }
            }
        }
        // Symmetric channel: the uniform input achieves capacity.
        InfoQuantities {
            h_y,
            h_y_given_x,
            mutual_info,
            capacity: mutual_info,
        }
    }

    /// Sends one letter: a uniform draw from `{0,1,2}` picks among the three
    /// other letters in alphabet order.
    pub fn transmit_letter<R: Rng + ?Sized>(&self, x: F4, rng: &mut R) -> F4 {
        let r: u8 = rng.random_range(0..3);
        let y = if r >= x.bits() { r + 1 } else { r };
        F4::from_bits(y)
    }

    /// Sends a word through the n-th extension.
    pub fn transmit<R: Rng + ?Sized>(&self, x: &Word, rng: &mut R) -> Word {
        let out: Vec<F4> = x.iter().map(|s| self.transmit_letter(s, rng)).collect();
        Word::from_symbols(&out).expect("input word is non-empty")
    }
}

pub fn info_quantities() -> InfoQuantities<f64> {
    AntiChannel.info_quantities()
}

pub fn joint_probability<T: Scalar>(x: F4, y: F4) -> T {
    AntiChannel.joint_probability(x, y)
}

pub fn transmit<R: Rng + ?Sized>(x: &Word, rng: &mut R) -> Word {
    AntiChannel.transmit(x, rng)
}
