"""
Kernel families for integral representations. Every concrete subclass of
BaseKernel in this folder is discovered by KernelFactory.
"""
