use std::sync::Arc;

use crate::group::builtin::dihedral;
use crate::group::GroupTable;
use crate::scalars::Phase;

use super::Cochain;

/// The generator θ of H³(D₃, ℚ/ℤ) ≅ ℤ/6, raised to the k-th power.
///
/// With s^m r^n at index 3m + n and t = (−1)^{m₃} n₂ + n₃,
/// θ = (1/9)(−1)^{m₂+m₃} n₁ (t − [t]₃) + (1/2) m₁m₂m₃ mod 1.
///
/// Panics unless `group` is the builtin `dihedral(3)` table.
pub fn theta_d3(group: &Arc<GroupTable>, k: i64) -> Cochain {
    assert!(**group == dihedral(3), "theta_d3 needs the builtin dihedral(3) table");
    Cochain::from_fn(group.clone(), 3, |a| {
        let (m1, n1) = ((a[0] / 3) as i64, (a[0] % 3) as i64);
        let (m2, n2) = ((a[1] / 3) as i64, (a[1] % 3) as i64);
        let (m3, n3) = ((a[2] / 3) as i64, (a[2] % 3) as i64);
        let sign = |m: i64| if m % 2 == 0 { 1 } else { -1 };
        let t = sign(m3) * n2 + n3;
        let first = Phase::new(sign(m2 + m3) * n1 * (t - t.rem_euclid(3)), 9);
        let second = Phase::new(m1 * m2 * m3, 2);
        (first + second).scale(k)
    })
}
