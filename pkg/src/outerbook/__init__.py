"""Matching book embeddings of outerplanar graphs."""
