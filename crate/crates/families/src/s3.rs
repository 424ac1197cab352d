//! The S3 action on the parameter line generated by eta(v) = 1/(1-v) and
//! tau(v) = 1 - v.

use crate::projq::ProjQ;

/// Orbit of v under the S3 action, as a sorted set.  Orbits have length 3
/// or 6 over Q (eta has no rational fixed points).
pub fn s3_orbit(v: &ProjQ) -> Vec<ProjQ> {
    let e1 = v.eta();
    let e2 = e1.eta();
    let mut orbit = vec![
        v.clone(),
        e1.clone(),
        e2.clone(),
        v.tau(),
        e1.tau(),
        e2.tau(),
    ];
    orbit.sort();
    orbit.dedup();
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_orbits() {
        let o0 = s3_orbit(&ProjQ::from_i64(0));
        let mut expected = vec![ProjQ::from_i64(0), ProjQ::from_i64(1), ProjQ::Infinity];
        expected.sort();
        assert_eq!(o0, expected);

        let o2 = s3_orbit(&ProjQ::from_i64(2));
        let mut expected2 = vec![
            ProjQ::from_i64(2),
            ProjQ::from_ratio(1, 2),
            ProjQ::from_i64(-1),
        ];
        expected2.sort();
        assert_eq!(o2, expected2);
    }

    #[test]
    fn generic_orbit_has_length_six() {
        assert_eq!(s3_orbit(&ProjQ::from_i64(5)).len(), 6);
        assert_eq!(s3_orbit(&ProjQ::from_ratio(3, 4)).len(), 6);
    }

    #[test]
    fn eta_has_order_three() {
        for v in [ProjQ::from_i64(7), ProjQ::from_ratio(-2, 5), ProjQ::Infinity] {
            assert_eq!(v.eta().eta().eta(), v);
        }
    }
}
