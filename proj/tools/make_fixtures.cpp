// Writes the demo meshes used in the README walkthrough:
//   icosphere.obj  unit icosphere (star-shaped about the origin)
//   torus.obj      torus around the origin (not star-shaped)
//   band.obj       icosphere whose band.roi marks a hair-like cap over the +z pole
//   band.roi       triangle ids of that cap
#include <filesystem>
#include <fstream>
#include <iostream>

#include "polewarp/chart_io.hpp"
#include "polewarp/obj_io.hpp"
#include "polewarp/shapes.hpp"

int main(int argc, char** argv) {
    namespace fs = std::filesystem;
    const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::current_path();
    fs::create_directories(dir);

    polewarp::save_obj(polewarp::make_icosphere(3), dir / "icosphere.obj");
    polewarp::save_obj(polewarp::make_torus(1.0, 0.35, 48, 16), dir / "torus.obj");

    const polewarp::TriMesh band = polewarp::make_icosphere(3);
    polewarp::save_obj(band, dir / "band.obj");
    const polewarp::RoiMask roi(polewarp::cap_band_triangles(band, -0.25), band.num_triangles());
    std::ofstream roi_out(dir / "band.roi");
    roi_out << "# hair-like cap: triangles with centroid direction z > -0.25\n";
    polewarp::write_roi(roi, roi_out);

    std::cout << "wrote fixtures to " << dir.string() << '\n';
    return 0;
}
