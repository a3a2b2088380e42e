//! Camera math: quaternion/rotation conversion, world→camera transforms,
//! pinhole projection and the projective Jacobian used by splat projection.
//!
//! Conventions match the SfM tool's output: quaternions are stored (w, x, y, z)
//! and map world coordinates into the camera frame, `p_cam = R p_world + t`.

use nalgebra::{Matrix3, Vector2, Vector3};
use thiserror::Error;

use crate::colmap::CameraIntrinsics;

/// Points closer than this to the camera plane are culled rather than
/// projected; the projective Jacobian is ill-conditioned as z → 0.
pub const NEAR_PLANE: f64 = 0.01;

#[derive(Debug, Error, PartialEq)]
pub enum ProjectionError {
    #[error("point behind camera (z = {z})")]
    BehindCamera { z: f64 },
}

/// Rigid body transform: rotation (orthonormal, det +1) plus translation.
#[derive(Debug, Clone, PartialEq)]
pub struct RigidTransform {
    pub rotation: Matrix3<f64>,
    pub translation: Vector3<f64>,
}

impl RigidTransform {
    pub fn identity() -> Self {
        Self { rotation: Matrix3::identity(), translation: Vector3::zeros() }
    }

    pub fn new(rotation: Matrix3<f64>, translation: Vector3<f64>) -> Self {
        Self { rotation, translation }
    }

    pub fn from_quaternion(q: [f64; 4], translation: Vector3<f64>) -> Self {
        Self { rotation: quat_to_rotmat(q), translation }
    }

    /// Inverse transform: maps camera frame back to world frame.
    pub fn inverse(&self) -> Self {
        let rt = self.rotation.transpose();
        Self { rotation: rt, translation: -rt * self.translation }
    }

    /// Compose: `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            rotation: self.rotation * other.rotation,
            translation: self.rotation * other.translation + self.translation,
        }
    }
}

/// Calibrated camera: intrinsics plus a world→camera pose.
#[derive(Debug, Clone)]
pub struct PinholeCamera {
    pub intrinsics: CameraIntrinsics,
    pub pose: RigidTransform,
}

impl PinholeCamera {
    pub fn new(intrinsics: CameraIntrinsics, pose: RigidTransform) -> Self {
        Self { intrinsics, pose }
    }

    pub fn width(&self) -> usize {
        self.intrinsics.width as usize
    }

    pub fn height(&self) -> usize {
        self.intrinsics.height as usize
    }

    /// Camera center in world coordinates, `-Rᵀ t`.
    pub fn center(&self) -> Vector3<f64> {
        -(self.pose.rotation.transpose() * self.pose.translation)
    }
}

/// Rotation matrix of a unit quaternion (w, x, y, z).
///
/// The caller is expected to pass a quaternion with |q| = 1 ± 1e-6; the
/// matrix formula assumes it.
pub fn quat_to_rotmat(q: [f64; 4]) -> Matrix3<f64> {
    let [w, x, y, z] = q;
    Matrix3::new(
        1.0 - 2.0 * (y * y + z * z),
        2.0 * (x * y - w * z),
        2.0 * (x * z + w * y),
        2.0 * (x * y + w * z),
        1.0 - 2.0 * (x * x + z * z),
        2.0 * (y * z - w * x),
        2.0 * (x * z - w * y),
        2.0 * (y * z + w * x),
        1.0 - 2.0 * (x * x + y * y),
    )
}

/// Partial derivatives of `quat_to_rotmat` with respect to each unit
/// quaternion component, in (w, x, y, z) order.
pub fn quat_to_rotmat_partials(q: [f64; 4]) -> [Matrix3<f64>; 4] {
    let [w, x, y, z] = q;
    let dw = Matrix3::new(0.0, -z, y, z, 0.0, -x, -y, x, 0.0) * 2.0;
    let dx = Matrix3::new(0.0, y, z, y, -2.0 * x, -w, z, w, -2.0 * x) * 2.0;
    let dy = Matrix3::new(-2.0 * y, x, w, x, 0.0, z, -w, z, -2.0 * y) * 2.0;
    let dz = Matrix3::new(-2.0 * z, -w, x, w, -2.0 * z, y, x, y, 0.0) * 2.0;
    [dw, dx, dy, dz]
}

/// Normalize a quaternion; returns `None` for (near-)zero norm.
pub fn normalize_quat(q: [f64; 4]) -> Option<[f64; 4]> {
    let n = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
    if n < 1e-12 || !n.is_finite() {
        return None;
    }
    Some([q[0] / n, q[1] / n, q[2] / n, q[3] / n])
}

/// Apply a world→camera transform to a world point.
#[inline]
pub fn world_to_camera(t: &RigidTransform, p: Vector3<f64>) -> Vector3<f64> {
    t.rotation * p + t.translation
}

/// Project a camera-frame point to pixel coordinates and depth.
pub fn project(
    cam: &PinholeCamera,
    p_cam: Vector3<f64>,
) -> Result<(Vector2<f64>, f64), ProjectionError> {
    if p_cam.z <= NEAR_PLANE {
        return Err(ProjectionError::BehindCamera { z: p_cam.z });
    }
    let (fx, fy) = cam.intrinsics.focal();
    let (cx, cy) = cam.intrinsics.principal_point();
    let u = cx + fx * p_cam.x / p_cam.z;
    let v = cy + fy * p_cam.y / p_cam.z;
    Ok((Vector2::new(u, v), p_cam.z))
}

/// Row-major 2×3 Jacobian of `project` at a camera-frame point:
/// `[[fx/z, 0, -fx·x/z²], [0, fy/z, -fy·y/z²]]`.
pub fn projection_jacobian(cam: &PinholeCamera, p_cam: Vector3<f64>) -> nalgebra::Matrix2x3<f64> {
    let (fx, fy) = cam.intrinsics.focal();
    let z = p_cam.z;
    let z2 = z * z;
    nalgebra::Matrix2x3::new(fx / z, 0.0, -fx * p_cam.x / z2, 0.0, fy / z, -fy * p_cam.y / z2)
}
