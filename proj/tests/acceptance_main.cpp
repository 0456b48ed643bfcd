#include "psmoa/psmoa.hpp"
int main() { return 0; }
