use crate::algebra::field::prime_power;
use crate::error::{Error, Result};

/// Instance parameters: `l = v2(q^2-1) - 3`, `x = 2^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub l: u32,
    pub q: u32,
    pub x: u64,
}

fn v2(n: u64) -> u32 {
    n.trailing_zeros()
}

/// Smallest prime power `q ≡ 1 (mod 4)` with `v2(q-1) = l+2`.
pub fn choose_q(l: u32) -> u32 {
    let step = 1u64 << (l + 2);
    let mut q = step + 1;
    loop {
        if v2(q - 1) == l + 2 && prime_power(q).is_some() {
            return q as u32;
        }
        q += 2 * step;
    }
}

impl Params {
    pub fn new(l: u32) -> Result<Params> {
        if l > 5 {
            return Err(Error::ParamsInvalid(format!("l = {l} is outside 0..=5")));
        }
        Params::with_q(choose_q(l))
    }

    pub fn with_q(q: u32) -> Result<Params> {
        match prime_power(q as u64) {
            Some((p, _)) if p != 2 => {}
            _ => return Err(Error::ParamsInvalid(format!("q = {q} is not an odd prime power"))),
        }
        if q % 4 != 1 {
            return Err(Error::ParamsInvalid(format!("q = {q} is not 1 mod 4")));
        }
        let l = v2((q as u64) * (q as u64) - 1) - 3;
        Ok(Params { l, q, x: 1 << l })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chosen_primes() {
        let qs: Vec<u32> = (0..=5).map(choose_q).collect();
        assert_eq!(qs, vec![5, 9, 17, 97, 193, 641]);
        for l in 0..=5 {
            assert_eq!(Params::new(l).unwrap().l, l);
        }
    }
}
