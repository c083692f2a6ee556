//! Ordinates of nontrivial zeta zeros, used to pre-split integration panels.

use std::path::Path;

use crate::error::{Error, Result};

/// First 100 zero ordinates, 9 decimals.
const FIRST_100: [f64; 100] = [
    14.134725142,
    21.022039639,
    25.010857580,
    30.424876126,
    32.935061588,
    37.586178159,
    40.918719012,
    43.327073281,
    48.005150881,
    49.773832478,
    52.970321478,
    56.446247697,
    59.347044003,
    60.831778525,
    65.112544048,
    67.079810529,
    69.546401711,
    72.067157674,
    75.704690699,
    77.144840069,
    79.337375020,
    82.910380854,
    84.735492981,
    87.425274613,
    88.809111208,
    92.491899271,
    94.651344041,
    95.870634228,
    98.831194218,
    101.317851006,
    103.725538040,
    105.446623052,
    107.168611184,
    111.029535543,
    111.874659177,
    114.320220915,
    116.226680321,
    118.790782866,
    121.370125002,
    122.946829294,
    124.256818554,
    127.516683880,
    129.578704200,
    131.087688531,
    133.497737203,
    134.756509753,
    138.116042055,
    139.736208952,
    141.123707404,
    143.111845808,
    146.000982487,
    147.422765343,
    150.053520421,
    150.925257612,
    153.024693811,
    156.112909294,
    157.597591818,
    158.849988171,
    161.188964138,
    163.030709687,
    165.537069188,
    167.184439978,
    169.094515416,
    169.911976479,
    173.411536520,
    174.754191523,
    176.441434298,
    178.377407776,
    179.916484020,
    182.207078484,
    184.874467848,
    185.598783678,
    187.228922584,
    189.416158656,
    192.026656361,
    193.079726604,
    195.265396680,
    196.876481841,
    198.015309676,
    201.264751944,
    202.493594514,
    204.189671803,
    205.394697202,
    207.906258888,
    209.576509717,
    211.690862595,
    213.347919360,
    214.547044783,
    216.169538508,
    219.067596349,
    220.714918839,
    221.430705555,
    224.007000255,
    224.983324670,
    227.421444280,
    229.337413306,
    231.250188700,
    231.987235253,
    233.693404179,
    236.524229666,
];

/// Strictly increasing positive ordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroOrdinates {
    ordinates: Vec<f64>,
}

impl Default for ZeroOrdinates {
    fn default() -> Self {
        Self {
            ordinates: FIRST_100.to_vec(),
        }
    }
}

impl ZeroOrdinates {
    pub fn new(ordinates: Vec<f64>) -> Result<Self> {
        if let Some(bad) = ordinates.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
            return Err(Error::InvalidOrdinates(format!("ordinate {bad} is not positive")));
        }
        if let Some(w) = ordinates.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::InvalidOrdinates(format!(
                "ordinates not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        Ok(Self { ordinates })
    }

    /// One decimal ordinate per line; blank lines and lines starting with
    /// `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ordinates = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let value: f64 = line.parse().map_err(|_| {
                Error::InvalidOrdinates(format!("line {}: cannot parse {line:?}", lineno + 1))
            })?;
            ordinates.push(value);
        }
        Self::new(ordinates)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Ordinates in `(0, t_max]`.
    pub fn up_to(&self, t_max: f64) -> impl Iterator<Item = f64> + '_ {
        self.ordinates.iter().copied().take_while(move |&t| t <= t_max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_table_is_valid() {
        let z = ZeroOrdinates::default();
        assert_eq!(z.len(), 100);
        assert!(ZeroOrdinates::new(z.as_slice().to_vec()).is_ok());
        assert_eq!(z.as_slice()[0], 14.134725142);
        // the height 117.1 reached in the strip experiment covers 37 zeros
        assert_eq!(z.up_to(117.1).count(), 37);
    }

    #[test]
    fn parse_skips_comments() {
        let z = ZeroOrdinates::parse("# zeros\n14.134725\n\n21.022040\n  # more\n25.010858\n").unwrap();
        assert_eq!(z.as_slice(), &[14.134725, 21.022040, 25.010858]);
    }

    #[test]
    fn parse_rejects_bad_tables() {
        assert!(ZeroOrdinates::parse("21.0\n14.1\n").is_err());
        assert!(ZeroOrdinates::parse("14.1\n14.1\n").is_err());
        assert!(ZeroOrdinates::parse("-3\n").is_err());
        assert!(ZeroOrdinates::parse("abc\n").is_err());
        assert!(ZeroOrdinates::parse("").unwrap().is_empty());
    }
}
