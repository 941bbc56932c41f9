"""
Módulo de infraestrutura: configuração, logging e serialização.
"""
