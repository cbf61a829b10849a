from chains.bottleneck import BottleneckMatrix, bottleneck_matrix
from chains.chain_graph import Chain, chain_ball, chain_component, witness_chain
from chains.errors import NotJoinable
from chains.merge_tree import MergeEvent, MergeTree, merge_tree

__all__ = [
    'BottleneckMatrix',
    'bottleneck_matrix',
    'Chain',
    'chain_ball',
    'chain_component',
    'witness_chain',
    'NotJoinable',
    'MergeEvent',
    'MergeTree',
    'merge_tree',
]
