#include "glqec/cli.hpp"

int main(int argc, char** argv) { return glqec::run(argc, argv); }
