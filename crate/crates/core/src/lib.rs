pub mod cli;
pub mod cone;
pub mod delaunay;
pub mod enumerate;
pub mod exact;
pub mod hyp;
pub mod ltype;
pub mod unimod;
