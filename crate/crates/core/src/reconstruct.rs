//! Simpson-rule relations between cell averages, interface values, and
//! cell-centered values.
//!
//! All three identities are exact for polynomials of degree <= 3 on the cell
//! (tensor products of such in 2D), which is what makes them usable inside a
//! fourth-order scheme.

/// Cell-centered value from the cell average and the two interface values:
/// `z_i = (6*avg - (z_left + z_right)) / 4`.
#[inline]
pub fn cell_center_value_1d(avg: f64, left_pt: f64, right_pt: f64) -> f64 {
    (6.0 * avg - (left_pt + right_pt)) / 4.0
}

/// Cell-centered value from the cell average, the four face-centered values
/// (order: x-left, x-right, y-down, y-up), and the four corner values
/// (order: down-left, down-right, up-left, up-right):
/// `z_ij = (36*avg - 4*sum(faces) - sum(corners)) / 16`.
///
/// The sums are grouped so that swapping the roles of x and y permutes
/// values within the inner pairs only, making the reconstruction exactly
/// symmetric under grid transposition.
#[inline]
pub fn cell_center_value_2d(avg: f64, face_pts: [f64; 4], corner_pts: [f64; 4]) -> f64 {
    let faces = (face_pts[0] + face_pts[1]) + (face_pts[2] + face_pts[3]);
    let corners = (corner_pts[0] + corner_pts[3]) + (corner_pts[1] + corner_pts[2]);
    (36.0 * avg - 4.0 * faces - corners) / 16.0
}

/// Simpson integral mean along one face: `(end_a + 4*mid + end_b) / 6`.
#[inline]
pub fn simpson_face_flux(end_a: f64, mid: f64, end_b: f64) -> f64 {
    (end_a + 4.0 * mid + end_b) / 6.0
}
