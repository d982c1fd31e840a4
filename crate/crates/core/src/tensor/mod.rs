//! Tensor substrate: storage, element types, pure shaped operations,
//! reverse-mode differentiation, and serialization.
//!
//! A [`Tensor`] is an immutable row-major n-dimensional array over `f32`
//! or `f64`. Data is shared behind an `Arc`, so clones are cheap and the
//! differentiation tape can retain whatever it needs for the backward
//! pass without copying buffers.

pub mod gradcheck;
pub mod init;
pub mod ntf;
pub mod ops;
pub mod tape;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Element type of a tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dtype {
    F32,
    F64,
}

impl Dtype {
    /// One-byte code used by the NTF container.
    pub fn code(self) -> u8 {
        match self {
            Dtype::F32 => 1,
            Dtype::F64 => 2,
        }
    }

    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            1 => Ok(Dtype::F32),
            2 => Ok(Dtype::F64),
            other => Err(Error::Format(format!("unknown dtype code {other}"))),
        }
    }

    pub fn size_bytes(self) -> usize {
        match self {
            Dtype::F32 => 4,
            Dtype::F64 => 8,
        }
    }
}

impl fmt::Display for Dtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dtype::F32 => write!(f, "f32"),
            Dtype::F64 => write!(f, "f64"),
        }
    }
}

/// Floating-point element trait implemented for `f32` and `f64`.
///
/// Transcendentals route through `f64` so that both element types share
/// one accuracy baseline; `erf` comes from libm.
pub trait Scalar:
    Copy
    + PartialOrd
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    const DTYPE: Dtype;
    const ZERO: Self;
    const ONE: Self;
    /// Number of bytes in the little-endian encoding.
    const BYTES: usize;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn is_finite(self) -> bool;
    /// Most negative finite value; the masking surrogate for `-inf`.
    fn min_finite() -> Self;

    fn exp(self) -> Self {
        Self::from_f64(self.to_f64().exp())
    }
    fn ln(self) -> Self {
        Self::from_f64(self.to_f64().ln())
    }
    fn sqrt(self) -> Self {
        Self::from_f64(self.to_f64().sqrt())
    }
    fn abs(self) -> Self {
        if self < Self::ZERO {
            -self
        } else {
            self
        }
    }
    fn erf(self) -> Self {
        Self::from_f64(libm::erf(self.to_f64()))
    }
    fn maximum(self, other: Self) -> Self {
        if self > other {
            self
        } else {
            other
        }
    }
    fn minimum(self, other: Self) -> Self {
        if self < other {
            self
        } else {
            other
        }
    }

    fn write_le(self, out: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;
}

impl Scalar for f32 {
    const DTYPE: Dtype = Dtype::F32;
    const ZERO: f32 = 0.0;
    const ONE: f32 = 1.0;
    const BYTES: usize = 4;

    fn from_f64(v: f64) -> f32 {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn is_finite(self) -> bool {
        f32::is_finite(self)
    }
    fn min_finite() -> f32 {
        f32::MIN
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> f32 {
        f32::from_le_bytes(bytes[..4].try_into().unwrap())
    }
}

impl Scalar for f64 {
    const DTYPE: Dtype = Dtype::F64;
    const ZERO: f64 = 0.0;
    const ONE: f64 = 1.0;
    const BYTES: usize = 8;

    fn from_f64(v: f64) -> f64 {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn min_finite() -> f64 {
        f64::MIN
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> f64 {
        f64::from_le_bytes(bytes[..8].try_into().unwrap())
    }
}

/// Immutable row-major n-dimensional array.
#[derive(Clone, PartialEq)]
pub struct Tensor<T: Scalar> {
    shape: Vec<usize>,
    data: Arc<Vec<T>>,
}

impl<T: Scalar> fmt::Debug for Tensor<T> {
    fmt_debug_tensor!();
}

macro_rules! fmt_debug_tensor {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "Tensor<{}>{:?}", T::DTYPE, self.shape)?;
            if self.len() <= 8 {
                write!(f, " {:?}", self.data())
            } else {
                write!(f, " [{} elements]", self.len())
            }
        }
    };
}
use fmt_debug_tensor;

pub fn num_elements(shape: &[usize]) -> usize {
    shape.iter().product()
}

impl<T: Scalar> Tensor<T> {
    /// Build a tensor from a shape and row-major data.
    ///
    /// Errors if the element count does not match the shape or any value
    /// is non-finite.
    pub fn from_vec(shape: Vec<usize>, data: Vec<T>) -> Result<Self> {
        if num_elements(&shape) != data.len() {
            return Err(Error::dim(
                "Tensor::from_vec",
                format!("shape {:?} holds {} elements, got {}", shape, num_elements(&shape), data.len()),
            ));
        }
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::Numeric(format!(
                "non-finite element {} at flat index {i}",
                data[i]
            )));
        }
        Ok(Self::from_vec_unchecked(shape, data))
    }

    /// Internal constructor that skips the finiteness scan; used by ops
    /// whose inputs were already validated.
    pub(crate) fn from_vec_unchecked(shape: Vec<usize>, data: Vec<T>) -> Self {
        debug_assert_eq!(num_elements(&shape), data.len());
        Tensor {
            shape,
            data: Arc::new(data),
        }
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = num_elements(&shape);
        Self::from_vec_unchecked(shape, vec![T::ZERO; n])
    }

    pub fn full(shape: Vec<usize>, value: T) -> Self {
        let n = num_elements(&shape);
        Self::from_vec_unchecked(shape, vec![value; n])
    }

    /// Rank-0 tensor holding one value.
    pub fn scalar(value: T) -> Self {
        Self::from_vec_unchecked(vec![], vec![value])
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn dtype(&self) -> Dtype {
        T::DTYPE
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// Mutable access; copies the buffer if it is shared.
    pub fn data_mut(&mut self) -> &mut [T] {
        Arc::make_mut(&mut self.data)
    }

    /// The single value of a rank-0 or one-element tensor.
    pub fn item(&self) -> Result<T> {
        if self.len() != 1 {
            return Err(Error::Contract(format!(
                "item() on tensor of shape {:?}",
                self.shape
            )));
        }
        Ok(self.data[0])
    }

    pub fn is_scalar(&self) -> bool {
        self.len() == 1
    }

    /// Same data, new shape (element counts must agree).
    pub fn reshape(&self, shape: Vec<usize>) -> Result<Self> {
        if num_elements(&shape) != self.len() {
            return Err(Error::shape("reshape", &self.shape, &shape));
        }
        Ok(Tensor {
            shape,
            data: Arc::clone(&self.data),
        })
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        let data = self.data.iter().map(|&v| f(v)).collect();
        Self::from_vec_unchecked(self.shape.clone(), data)
    }

    pub fn zip_map(&self, other: &Self, op: &'static str, f: impl Fn(T, T) -> T) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::shape(op, &self.shape, &other.shape));
        }
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self::from_vec_unchecked(self.shape.clone(), data))
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Convert elements to another scalar type through f64.
    pub fn cast<U: Scalar>(&self) -> Tensor<U> {
        let data = self.data.iter().map(|v| U::from_f64(v.to_f64())).collect();
        Tensor::from_vec_unchecked(self.shape.clone(), data)
    }

    /// Largest absolute difference to another tensor of the same shape.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.shape != other.shape {
            return Err(Error::shape("max_abs_diff", &self.shape, &other.shape));
        }
        Ok(self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
            .fold(0.0, f64::max))
    }

    /// Exact equality of shape and all element bit patterns.
    pub fn bit_eq(&self, other: &Self) -> bool {
        self.shape == other.shape
            && self
                .data
                .iter()
                .zip(other.data.iter())
                .all(|(a, b)| a.to_f64().to_bits() == b.to_f64().to_bits())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_checks_element_count() {
        let err = Tensor::<f32>::from_vec(vec![2, 3], vec![0.0; 5]).unwrap_err();
        assert!(matches!(err, Error::Dimension { .. }));
    }

    #[test]
    fn from_vec_rejects_non_finite() {
        let err = Tensor::from_vec(vec![2], vec![1.0f32, f32::NAN]).unwrap_err();
        assert!(matches!(err, Error::Numeric(_)));
    }

    #[test]
    fn scalar_round_trip() {
        let t = Tensor::scalar(4.25f64);
        assert_eq!(t.rank(), 0);
        assert_eq!(t.item().unwrap(), 4.25);
    }

    #[test]
    fn reshape_shares_data() {
        let t = Tensor::from_vec(vec![2, 3], (0..6).map(|i| i as f32).collect()).unwrap();
        let r = t.reshape(vec![3, 2]).unwrap();
        assert_eq!(r.data(), t.data());
        assert!(t.reshape(vec![4]).is_err());
    }

    #[test]
    fn cast_preserves_values() {
        let t = Tensor::from_vec(vec![3], vec![1.5f32, -2.0, 0.25]).unwrap();
        let d: Tensor<f64> = t.cast();
        assert_eq!(d.data(), &[1.5f64, -2.0, 0.25]);
    }
}
