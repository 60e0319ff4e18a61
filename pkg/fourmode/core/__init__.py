"""Computational core: Hamiltonian, Hopf map, dynamics, triples, oracle, optimizer."""
