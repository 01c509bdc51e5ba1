//! `value` or `start:stop:step` flag values.

use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RangeSpec {
    Fixed(f64),
    Stepped { start: f64, stop: f64, step: f64 },
}

impl RangeSpec {
    /// Grid points `start + k·step` up to `stop`, tolerating roundoff at the end.
    pub fn values(&self) -> Vec<f64> {
        match *self {
            RangeSpec::Fixed(v) => vec![v],
            RangeSpec::Stepped { start, stop, step } => {
                let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
                (0..count)
                    .map(|k| if k + 1 == count && (start + k as f64 * step - stop).abs() < 1e-9 * step {
                        stop
                    } else {
                        start + k as f64 * step
                    })
                    .collect()
            }
        }
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("'{t}' is not a number"))
                .and_then(|v| if v.is_finite() { Ok(v) } else { Err(format!("'{t}' is not finite")) })
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(RangeSpec::Fixed(num(v)?)),
            [start, stop, step] => {
                let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
                if step <= 0.0 {
                    return Err(format!("range step must be > 0 (got {step})"));
                }
                if start > stop {
                    return Err(format!("range start {start} exceeds stop {stop}"));
                }
                Ok(RangeSpec::Stepped { start, stop, step })
            }
            _ => Err(format!("expected a number or start:stop:step, got '{s}'")),
        }
    }
}
