use rug::Float;

/// Working precision and error policy threaded through every evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    pub mantissa_bits: u32,
    pub target_digits: u32,
    pub guard_digits: u32,
}

const LOG2_10: f64 = std::f64::consts::LOG2_10;

impl PrecisionContext {
    pub const DEFAULT_TARGET: u32 = 30;
    pub const DEFAULT_GUARD: u32 = 10;

    /// Context for `target` decimal digits with the default guard.
    pub fn new(target_digits: u32) -> Self {
        Self::with_guard(target_digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(target_digits: u32, guard_digits: u32) -> Self {
        let need = ((target_digits + guard_digits) as f64 * LOG2_10).ceil() as u32;
        PrecisionContext { mantissa_bits: need + 16, target_digits, guard_digits }
    }

    /// Smallest admissible mantissa for the given digit budget.
    pub fn min_bits(target_digits: u32, guard_digits: u32) -> u32 {
        ((target_digits + guard_digits) as f64 * LOG2_10).ceil() as u32
    }

    pub fn is_valid(&self) -> bool {
        self.mantissa_bits >= Self::min_bits(self.target_digits, self.guard_digits)
    }

    /// Same digit targets at twice the precision; used for audit runs.
    pub fn doubled(&self) -> Self {
        Self::with_guard(2 * self.target_digits, 2 * self.guard_digits)
    }

    pub fn with_extra_bits(&self, extra: u32) -> Self {
        PrecisionContext { mantissa_bits: self.mantissa_bits + extra, ..*self }
    }

    pub fn prec(&self) -> u32 {
        self.mantissa_bits
    }

    /// Total decimal digits carried (target plus guard).
    pub fn work_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }

    /// Absolute stopping threshold `10^-(target+guard)`.
    pub fn abs_eps(&self) -> Float {
        let ten = Float::with_val(self.mantissa_bits, 10);
        let e = -(self.work_digits() as i32);
        Float::with_val(self.mantissa_bits, rug::ops::Pow::pow(ten, e))
    }

    pub fn abs_eps_f64(&self) -> f64 {
        10f64.powi(-(self.work_digits() as i32))
    }

    /// A float at this context's precision.
    pub fn f<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.mantissa_bits, v)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::new(Self::DEFAULT_TARGET)
    }
}
