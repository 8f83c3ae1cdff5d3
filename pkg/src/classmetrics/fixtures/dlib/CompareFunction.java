package dlib;

public interface CompareFunction
{
    int compare (Object left, Object right);
}
