package dlib;

public interface Print_Readable
{
    void printOn (Object sink);
}
