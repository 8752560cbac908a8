//! Cylinder and cone models: the center map, the AC/BD surfaces, the
//! projective swap relating the two models, and the rectangle locus.

mod center;
mod cone;
mod cylinder;
mod locus;

pub use center::{
    center_map, center_map_matrix, invert_center_map, shared_center_count, CenterPoint, CenterPreimage,
    ImageDescription,
};
pub use cone::{
    cone_point_to_cylinder, cone_surface, cylinder_point_to_cone, projective_swap, swap_form, Mat4, CONE_Z_SCALE,
};
pub use cylinder::{
    cross_section_area, cylinder_principal_axes, cylinder_surface, midpoint_matrix, CylinderSurface, Factor,
    FlatCylinder, MidpointMatrix, PrincipalAxes, Quadric, Space,
};
pub use locus::{classify_conic, locus, locus_conic, Conic, LocusKind, LocusReport};
