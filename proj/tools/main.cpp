#include "cosserat_plate/cli.hpp"

int main(int argc, char** argv) { return cosserat_plate::run(argc, argv); }
