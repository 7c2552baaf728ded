#ifndef SMALLMINORS_TESTS_CORPUS_HPP
#define SMALLMINORS_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "smallminors/generators.hpp"

namespace corpus {

struct Entry {
    std::string name;
    smallminors::EmbeddedGraph embedding;
};

// every embedding the generators produce, at a few sizes
inline std::vector<Entry> embeddings() {
    using namespace smallminors;
    std::vector<Entry> out;
    out.push_back({"k4", planar_k4()});
    for (int len : {8, 10, 24}) out.push_back({"cycle_square_" + std::to_string(len), cycle_square(len)});
    out.push_back({"icosahedron", icosahedron()});
    out.push_back({"dodecahedron", dodecahedron()});
    out.push_back({"cube", cube()});
    out.push_back({"snub", snub_dodecahedron()});
    for (int s : {3, 5, 9}) out.push_back({"wheel_" + std::to_string(s), wheel(s)});
    out.push_back({"plane_cycle_10", plane_cycle(10)});
    for (int k : {0, 1, 2}) out.push_back({"gadget_" + std::to_string(k), planar_4plus_eps_gadget(k)});
    out.push_back({"bouquet_2_2", genus_bouquet(2, 2)});
    out.push_back({"bouquet_4_3", genus_bouquet(4, 3)});
    out.push_back({"one_face_2_1", surface_one_face_degree4(2, 1)});
    out.push_back({"one_face_4_2", surface_one_face_degree4(4, 2)});
    for (int len : {10, 24}) out.push_back({"square_matching_" + std::to_string(len), cycle_square_plus_matching(len)});
    for (int c : {3, 12}) out.push_back({"torus_" + std::to_string(c), toroidal_grid(c)});
    return out;
}

}  // namespace corpus

#endif
