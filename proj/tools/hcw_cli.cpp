#include <cstdio>
int main(){ std::puts("hcw cli placeholder"); }
